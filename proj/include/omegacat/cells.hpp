#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace omegacat {

// Nominal cell identity. Cells are compared by id only; cross-presentation
// comparisons always go through explicit maps.
using CellId = std::string;

// Thrown for structurally broken input (dangling ids, degree arithmetic,
// duplicate ids). Distinct from law violations, which go into reports.
struct malformed_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when an operation is called outside its precondition
// (not composable, degree mismatch, unknown cell).
struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CellRecord {
  CellId id;
  int degree = 0;
  std::optional<CellId> dom;          // absent iff degree == 0
  std::optional<CellId> cod;          // absent iff degree == 0
  std::optional<CellId> identity_of;  // present iff this cell is e(z)

  friend bool operator==(const CellRecord&, const CellRecord&) = default;
};

// A stored cell (epower == 0) or a formal e-iterate above it. Cells above
// the truncation level are never stored; they exist only in this form.
struct VirtualCell {
  CellId cell;
  int epower = 0;

  friend bool operator==(const VirtualCell&, const VirtualCell&) = default;
  friend auto operator<=>(const VirtualCell&, const VirtualCell&) = default;
};

struct CompositionKey {
  int k = 1;       // composition depth, d^k(left) = c^k(right)
  CellId left;     // outer factor: result = left o_k right
  CellId right;

  friend bool operator==(const CompositionKey&, const CompositionKey&) = default;
  friend auto operator<=>(const CompositionKey&, const CompositionKey&) = default;
};

struct Violation {
  std::string law;
  std::vector<std::string> witness;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  std::map<std::string, long> counts;  // checks performed per law

  bool ok() const { return violations.empty(); }
  void add(std::string law, std::vector<std::string> witness, std::string detail);
  void bump(const std::string& law, long n = 1) { counts[law] += n; }
  // Appends the other report's violations and counts.
  void merge(const ValidationReport& other);
};

// A finite truncated strict infinity-category: graded cells with boundary
// maps, stored identities below the truncation level, and total composition
// tables on composable pairs. Immutable once built.
class CategoryPresentation {
 public:
  std::string name;
  int truncation = 0;
  std::map<CellId, CellRecord> cells;
  std::map<CellId, CellId> identity_map;            // z -> e(z), degree(z) < truncation
  std::map<CompositionKey, CellId> composition;     // (k, f, g) -> f o_k g

  // Structural sanity: unique/resolvable ids, degree arithmetic, identity
  // record shape, truncation bound. Throws malformed_error.
  void check_wellformed() const;

  bool has_cell(const CellId& id) const { return cells.count(id) != 0; }
  const CellRecord& record(const CellId& id) const;
  int degree_of(const CellId& id) const { return record(id).degree; }

  std::vector<CellId> cells_of_degree(int d) const;
  std::vector<CellId> objects() const { return cells_of_degree(0); }

  // --- virtual-cell layer -------------------------------------------------

  // Normal form: epower == 0, or the base sits at the truncation level.
  VirtualCell normalize(VirtualCell v) const;
  VirtualCell vcell(const CellId& id) const { return normalize({id, 0}); }

  int vdegree(const VirtualCell& v) const;
  VirtualCell videntity(const VirtualCell& v, int k = 1) const;  // e^k(v)
  VirtualCell vdom(const VirtualCell& v) const;
  VirtualCell vcod(const VirtualCell& v) const;
  VirtualCell vdom(const VirtualCell& v, int k) const;  // d^k
  VirtualCell vcod(const VirtualCell& v, int k) const;  // c^k
  bool is_identity(const VirtualCell& v) const;

  // Table lookup with the Lemma-1.2 reduction for virtual arguments.
  // Returns nullopt when the pair is not composable or the entry is missing.
  std::optional<VirtualCell> try_compose(int k, VirtualCell f, VirtualCell g) const;

  // Cells of L(x, y) at hom-relative degree r, i.e. stored cells w of degree
  // deg(x) + 1 + r with object-boundaries x, y. Sorted by id.
  std::vector<CellId> hom_cells(const CellId& x, const CellId& y, int r) const;
  // All hom-relative degrees 0 .. truncation - deg(x) - 1.
  std::vector<CellId> hom_cells(const CellId& x, const CellId& y) const;
};

std::string to_string(const VirtualCell& v);

}  // namespace omegacat
