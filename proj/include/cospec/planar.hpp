#pragma once

#include <boost/rational.hpp>

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cospec/graph.hpp"

namespace cospec {

using Rational = boost::rational<long long>;

/// Cyclic neighbour order at every vertex, all read with one global
/// orientation. Determines the faces of an embedding on an oriented surface.
struct RotationSystem {
  std::vector<std::vector<int>> order;  // order[v] = neighbours of v, cyclic
};

struct Face {
  std::vector<int> boundary;  // cyclic vertex sequence
  int length() const { return int(boundary.size()); }
};

/// Face lengths around a vertex, normalized to the lexicographic minimum over
/// starting position and direction.
struct SchlafliSymbol {
  std::vector<int> lengths;
  bool operator==(const SchlafliSymbol&) const = default;
  std::string str() const;
};

SchlafliSymbol normalize_symbol(std::vector<int> lengths);

/// Face traversal by the next-dart rule: the successor of dart (u,v) is
/// (v,w) where w follows u in rot[v].
std::vector<Face> faces(const Graph& g, const RotationSystem& rot);

struct EulerReport {
  int n = 0, e = 0, f = 0;
  int euler_characteristic = 0;
  bool spherical = false;  // n - e + f == 2
  /// For regular graphs: whether (1/n) sum_v p(v) == (d-2)/2 + 2/n exactly,
  /// with p(v) = sum of reciprocal face lengths around v.
  std::optional<bool> face_identity;
};

EulerReport verify_embedding(const Graph& g, const RotationSystem& rot);

SchlafliSymbol schlafli(const Graph& g, const RotationSystem& rot, VertexId v);

/// All chordless m-cycles, each reported once (anchored representation).
std::vector<std::vector<int>> chordless_cycles(const Graph& g, int m);

bool is_planar(const Graph& g);

/// Rotation read off from 3-space coordinates of a convex solid: neighbours
/// sorted by angle in the tangent plane, oriented by the outward normal.
RotationSystem rotation_from_coordinates(const Graph& g,
                                         const std::vector<std::array<double, 3>>& points);

/// True iff the cycle (as a vertex sequence) bounds a face of the embedding.
bool cycle_is_face(const std::vector<Face>& fs, const std::vector<int>& cycle);

struct CatalogEntry {
  std::string name;
  Graph graph;
  RotationSystem rotation;
  SchlafliSymbol expected_symbol;
  bool expected_walk_regular = true;
  std::optional<int> family_parameter;  // m for prisms/antiprisms
};

CatalogEntry build_family(const std::string& kind, int m);  // "prism"|"antiprism"

/// The 5 Platonic and 13 Archimedean entries plus the twisted (3,4,4,4)
/// negative control, from the data directory (env COSPEC_DATA_DIR overrides).
/// Tamper-detection hash over every field of an entry, stored in the data
/// files and re-checked at load time.
std::string catalog_checksum(const CatalogEntry& entry);

std::vector<CatalogEntry> load_catalog();
CatalogEntry load_catalog_entry(const std::string& name);
std::string data_dir();

struct CatalogCheck {
  std::string name;
  bool passed = false;
  std::vector<std::string> failures;  // violated predicates
};

struct CatalogReport {
  std::vector<CatalogCheck> checks;  // ordered by entry name
  bool all_passed = false;
};

/// Audits every positive entry (catalog + prisms m in {3,5..12} + antiprisms
/// m in {4..12}) and the twisted control. Case-specific closed-walk constants
/// are checked on the named solids.
CatalogReport verify_theorem3();

/// Audit of a single entry; `positive` controls which predicates apply.
CatalogCheck audit_entry(const CatalogEntry& entry, bool positive);

std::string to_dot(const Graph& g, const std::string& name);

}  // namespace cospec
