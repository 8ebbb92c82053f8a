#pragma once

// Parametric graph families: paths, cycles, open and closed quipus (paths or
// cycles carrying pendant paths at distinct spine positions), the named
// special shapes built on top of them, stars, daggers, and disjoint unions.
//
// Vertex labeling is deterministic: spine (or cycle) vertices come first as
// 0..r-1, then branch vertices follow in declaration order, each branch
// labeled consecutively outward.  Unions label their parts left to right.

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "quipu/graph.hpp"

namespace quipu {

struct FamilySpec {
  enum class Kind {
    Path,        // n >= 0 vertices (n = 0 is the null graph)
    Cycle,       // n >= 3 vertices
    OpenQuipu,   // spine path of r vertices, branches at 0 < m_1 < ... < m_t < r-1
    ClosedQuipu, // cycle of r vertices, branches at 0 <= m_1 < ... < m_t <= r-1
    Dagger,      // degree-4 center: three pendant edges plus a pendant path of m >= 1 edges
    HShape,      // n >= 10 vertices: branches 2@2 and 2@(n-7) on a spine of n-4
    TShape,      // n >= 6 vertices: branch 2@2 on a spine of n-2
    Lollipop,    // cycle of g >= 3 with one pendant path of n >= 1 edges at position 0
    Star,        // K_{1,k}, k >= 1
    Union,       // disjoint union of the parts
  };

  Kind kind = Kind::Path;
  long n = 0;                       // Path/Cycle/HShape/TShape order, Dagger m,
                                    // Star k, Lollipop pendant length
  long girth = 0;                   // Lollipop/ClosedQuipu cycle length r
  long spine = 0;                   // OpenQuipu spine vertex count r
  std::vector<int> positions;       // quipu branch positions m_i (strictly increasing)
  std::vector<int> lengths;         // quipu branch edge counts n_i >= 1
  std::vector<FamilySpec> parts;    // Union members

  static FamilySpec path(long n);
  static FamilySpec cycle(long n);
  static FamilySpec open_quipu(long spine, std::vector<int> positions,
                               std::vector<int> lengths);
  static FamilySpec closed_quipu(long girth, std::vector<int> positions,
                                 std::vector<int> lengths);
  static FamilySpec dagger(long m);
  static FamilySpec h_shape(long n);
  static FamilySpec t_shape(long n);
  static FamilySpec lollipop(long pendant, long girth);
  static FamilySpec star(long k);
  static FamilySpec union_of(std::vector<FamilySpec> parts);

  long order() const;  // vertex count of the built graph
};

// Validates all parameter constraints (reporting the failing bound) and
// builds the graph with the deterministic labeling described above.
Graph build_family(const FamilySpec& spec);

// Compact one-line form, e.g. "H:12", "OQ[r=8;2:2,5:2]", "U(P:2,CQ[g=6;0:1,3:1])".
std::string render_spec(const FamilySpec& spec);

struct SpecParseError : std::invalid_argument {
  SpecParseError(const std::string& msg, size_t position)
      : std::invalid_argument(msg), position(position) {}
  size_t position;
};

// Parse the DSL produced by render_spec:
//   P:<n>  C:<n>  H:<n>  T:<n>  D:<m>  K1:<k>  LL[g=<g>;<n>]
//   OQ[r=<r>;<pos>:<len>,...]   CQ[g=<g>;<pos>:<len>,...]
//   U(<spec>,<spec>,...)
// Throws SpecParseError with the offending position.
FamilySpec parse_spec(const std::string& text);

}  // namespace quipu
