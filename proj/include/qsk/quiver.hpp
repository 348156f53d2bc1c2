#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace qsk {

struct Arrow {
  std::string name;
  int src = -1;
  int tgt = -1;
};

// Finite quiver with named vertices.  Loops and multiple arrows are allowed.
class Quiver {
public:
  Quiver() = default;
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  static Quiver from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  const std::string& vertex_name(int i) const { return vertices_.at(i); }
  int vertex_index(const std::string& name) const;

  const std::vector<Arrow>& arrows() const { return arrows_; }
  int arrow_index(const std::string& name) const;

  // number of arrows i -> j
  int arrow_count(int i, int j) const;

private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::map<std::string, int> vertex_by_name_;
  std::map<std::string, int> arrow_by_name_;
};

// Contravariant involution together with the sign data (sigma on vertices,
// varsigma on arrows) defining a duality structure on representations.
struct Involution {
  std::vector<int> vertex_map;  // theta on vertices
  std::vector<int> arrow_map;   // theta on arrows
  std::vector<int> sigma;       // per vertex, +1/-1
  std::vector<int> varsigma;    // per arrow, +1/-1

  enum class Part { Plus, Fixed, Minus };
  // derived: Fixed when theta fixes the vertex/arrow, otherwise the member of
  // each two-element orbit with the smaller index is Plus
  std::vector<Part> vertex_part;
  std::vector<Part> arrow_part;

  static Involution from_json(const Quiver& q, const nlohmann::json& j);
  nlohmann::json to_json(const Quiver& q) const;

  void compute_parts();
  bool is_fixed_vertex(int i) const { return vertex_part[i] == Part::Fixed; }
};

// Empty vector means the report is clean and the duality structure is valid.
std::vector<std::string> validate_duality(const Quiver& q, const Involution& inv);

// Dimension vector, indexed by vertex.
struct DimVector {
  std::vector<long long> v;

  DimVector() = default;
  explicit DimVector(int n) : v(n, 0) {}
  explicit DimVector(std::vector<long long> x) : v(std::move(x)) {}

  long long operator()(int i) const { return v.at(i); }
  long long& operator()(int i) { return v.at(i); }
  int size() const { return static_cast<int>(v.size()); }
  long long total() const;
  bool is_zero() const;

  DimVector operator+(const DimVector& o) const;
  DimVector operator-(const DimVector& o) const;
  bool operator==(const DimVector& o) const { return v == o.v; }
  bool operator<(const DimVector& o) const { return v < o.v; }

  DimVector theta(const Involution& inv) const;           // permute by theta
  DimVector doubled(const Involution& inv) const;         // d + theta(d)
  bool theta_symmetric(const Involution& inv) const;
};

// Composition of an integer into positive parts.
using IntComposition = std::vector<int>;

// Vector composition: a tuple of nonzero dimension vectors.
struct VectorComposition {
  std::vector<DimVector> parts;

  VectorComposition() = default;
  explicit VectorComposition(std::vector<DimVector> p);

  int length() const { return static_cast<int>(parts.size()); }
  DimVector sum() const;

  bool operator==(const VectorComposition& o) const { return parts == o.parts; }
  bool operator<(const VectorComposition& o) const { return parts < o.parts; }
};

// Isotropic vector composition: nonzero finite parts plus a theta-symmetric
// (possibly zero) infinite part.  The underlying dimension vector is
// inf + sum of (d_j + theta(d_j)).
struct IsoComposition {
  std::vector<DimVector> finite;
  DimVector inf;

  IsoComposition() = default;
  IsoComposition(std::vector<DimVector> fin, DimVector infpart);

  int length() const { return static_cast<int>(finite.size()); }
  DimVector sum(const Involution& inv) const;

  // evenness constraint: at a theta-fixed vertex with sigma = -1 the infinite
  // part must be even
  void validate(const Quiver& q, const Involution& inv) const;

  bool operator==(const IsoComposition& o) const {
    return finite == o.finite && inf == o.inf;
  }
  bool operator<(const IsoComposition& o) const {
    if (finite != o.finite) return finite < o.finite;
    return inf < o.inf;
  }
};

// Coarsen d along beta: part r of the result is the sum of the parts of d in
// the r-th beta-block.
VectorComposition wedge_coarsen(const VectorComposition& d, const IntComposition& beta);

// Same, but the last beta-block is absorbed into the infinite part via
// d -> inf + sum of (d_j + theta(d_j)).  beta has length(d) + 1 entries summing
// to length(d) + 1, the last block always containing the infinite slot.
IsoComposition theta_wedge_coarsen(const Involution& inv, const IsoComposition& d,
                                   const IntComposition& beta);

// If d refines e, return the unique beta with wedge_coarsen(d, beta) == e.
std::optional<IntComposition> refines(const VectorComposition& d, const VectorComposition& e);
std::optional<IntComposition> theta_refines(const Involution& inv, const IsoComposition& d,
                                            const IsoComposition& e);

// All vector compositions of c (ordered tuples of nonzero dim vectors).
std::vector<VectorComposition> all_compositions(const DimVector& c);
// All isotropic vector compositions with underlying dimension vector c.
std::vector<IsoComposition> all_iso_compositions(const Quiver& q, const Involution& inv,
                                                 const DimVector& c);

// Text forms: "(2i1+i2, i3)" with vertex names, or bare integers for
// single-vertex quivers; isotropic compositions end with an "inf:" part.
std::string format_dimvec(const Quiver& q, const DimVector& d);
std::string format_comp(const Quiver& q, const VectorComposition& d);
std::string format_comp(const Quiver& q, const IsoComposition& d);
DimVector parse_dimvec(const Quiver& q, const std::string& s);
VectorComposition parse_comp(const Quiver& q, const std::string& s);
IsoComposition parse_iso_comp(const Quiver& q, const std::string& s);

}  // namespace qsk
