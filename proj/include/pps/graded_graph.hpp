#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace pps {

enum class VertexId : std::uint32_t {};
enum class ArrowId : std::uint32_t {};

constexpr std::size_t index(VertexId v) { return static_cast<std::size_t>(v); }
constexpr std::size_t index(ArrowId a) { return static_cast<std::size_t>(a); }
constexpr VertexId vertex_at(std::size_t i) { return static_cast<VertexId>(i); }
constexpr ArrowId arrow_at(std::size_t i) { return static_cast<ArrowId>(i); }

struct Arrow {
  std::string name;
  std::size_t degree = 0;
  VertexId src{};
  VertexId rng{};
};

enum class Mode { Free, Table };

std::string_view to_string(Mode mode);

/// A declared arrow by name; used for free generators and table arrows alike.
struct ArrowDecl {
  std::string name;
  std::size_t degree = 0;
  std::string src;
  std::string rng;

  friend bool operator==(const ArrowDecl&, const ArrowDecl&) = default;
};

/// x * y = z, by name.
struct MulEntry {
  std::string lhs;
  std::string rhs;
  std::string product;

  friend bool operator==(const MulEntry&, const MulEntry&) = default;
};

struct TableSpec {
  std::vector<std::string> vertices;
  std::vector<ArrowDecl> arrows;
  std::vector<MulEntry> entries;
  std::size_t cap = 0;
};

/// Finite vertex set, degree-graded arrows up to a cap, and a partial
/// composition table.  Immutable after construction.
///
/// Arrows are stored in canonical (degree, name) order; ArrowId is the
/// position in that order, so the first |V| arrows are the vertex identities.
/// Composition x*y is defined when src(x) = rng(y); identities compose
/// implicitly, every other product comes from the table.
class GradedSystem {
 public:
  using Factorization = std::pair<ArrowId, ArrowId>;

  [[nodiscard]] Mode mode() const { return mode_; }
  [[nodiscard]] std::size_t cap() const { return cap_; }

  [[nodiscard]] std::size_t vertex_count() const { return vertices_.size(); }
  [[nodiscard]] const std::string& vertex_name(VertexId v) const { return vertices_.at(index(v)); }
  [[nodiscard]] std::span<const std::string> vertex_names() const { return vertices_; }
  [[nodiscard]] std::optional<VertexId> find_vertex(std::string_view name) const;
  [[nodiscard]] VertexId vertex(std::string_view name) const;  // throws UnknownVertex

  [[nodiscard]] std::size_t arrow_count() const { return arrows_.size(); }
  [[nodiscard]] std::span<const Arrow> arrows() const { return arrows_; }
  [[nodiscard]] const Arrow& arrow(ArrowId a) const;  // throws UnknownArrow
  [[nodiscard]] std::optional<ArrowId> find_arrow(std::string_view name) const;
  [[nodiscard]] ArrowId arrow_id(std::string_view name) const;  // throws UnknownArrow
  [[nodiscard]] const std::string& name(ArrowId a) const { return arrow(a).name; }
  [[nodiscard]] std::size_t degree(ArrowId a) const { return arrow(a).degree; }
  [[nodiscard]] VertexId src(ArrowId a) const { return arrow(a).src; }
  [[nodiscard]] VertexId rng(ArrowId a) const { return arrow(a).rng; }

  [[nodiscard]] ArrowId identity(VertexId v) const;
  /// Arrows of degree n in canonical order; empty above the cap.
  [[nodiscard]] std::span<const ArrowId> of_degree(std::size_t n) const;
  /// Arrows of degree at most n, in canonical order (a prefix of arrows()).
  [[nodiscard]] std::size_t count_up_to_degree(std::size_t n) const;
  [[nodiscard]] std::span<const ArrowId> arrows_into(VertexId v) const { return into_.at(index(v)); }
  [[nodiscard]] std::span<const ArrowId> arrows_from(VertexId v) const { return from_.at(index(v)); }

  /// x*y, or nullopt when not composable or not listed.  Throws UnknownArrow.
  [[nodiscard]] std::optional<ArrowId> compose(ArrowId x, ArrowId y) const;

  /// Explicit table between arrows of positive degree.
  [[nodiscard]] const std::map<Factorization, ArrowId>& table() const { return table_; }
  /// Explicit table entries whose operand is an identity (Table mode only).
  [[nodiscard]] const std::vector<std::pair<Factorization, ArrowId>>& unit_entries() const {
    return unit_entries_;
  }
  /// Non-trivial factorizations z = x*y (both of positive degree) listed in the table.
  [[nodiscard]] std::span<const Factorization> factorizations(ArrowId z) const {
    return factorizations_.at(index(z));
  }

  /// z with prefix*z = t, if any.  Identities are handled implicitly.
  [[nodiscard]] std::optional<ArrowId> left_quotient(ArrowId t, ArrowId prefix) const;
  /// w with w*suffix = t, if any.
  [[nodiscard]] std::optional<ArrowId> right_quotient(ArrowId t, ArrowId suffix) const;

  /// The data of this system as a table specification (round-trips through build_table).
  [[nodiscard]] TableSpec to_table_spec() const;

  /// Only used by the builders; validates names and endpoints, not the axioms.
  static GradedSystem assemble(Mode mode, std::size_t cap, std::vector<std::string> vertices,
                               std::vector<ArrowDecl> arrows, const std::vector<MulEntry>& entries);

 private:
  GradedSystem() = default;

  Mode mode_ = Mode::Table;
  std::size_t cap_ = 0;
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::unordered_map<std::string, ArrowId> arrow_index_;
  std::vector<std::vector<ArrowId>> by_degree_;
  std::vector<std::vector<ArrowId>> into_;
  std::vector<std::vector<ArrowId>> from_;
  std::map<Factorization, ArrowId> table_;
  std::vector<std::pair<Factorization, ArrowId>> unit_entries_;
  std::vector<std::vector<Factorization>> factorizations_;
};

/// Path category of the graph of generators, truncated at `cap`.  Arrow names
/// are generator words joined by "·".
GradedSystem build_free(const std::vector<ArrowDecl>& generators,
                        const std::vector<std::string>& vertices, std::size_t cap);

/// Raw table system; only per-entry degree and endpoint rules are checked.
GradedSystem build_table(const TableSpec& spec);

enum class ViolationKind {
  EndpointMismatch,
  NotInjective,
  MissingComposite,
  NotAssociative,
  UnitLaw,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  /// Arrows involved, in the order the message names them.
  std::vector<ArrowId> witness;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  std::size_t cap = 0;

  [[nodiscard]] bool ok() const { return violations.empty(); }
};

/// Checks the weak-system axioms of the arrow data within the cap: endpoint
/// compatibility, injectivity of each degree pair, totality on composable
/// pairs, associativity and unit laws.
ValidationReport validate(const GradedSystem& sys);

struct DoubleFactorization {
  ArrowId arrow{};
  std::vector<ArrowId> first;
  std::vector<ArrowId> second;
};

struct PathCategoryVerdict {
  bool is_path_category = false;
  std::vector<ArrowId> irreducibles;
  std::optional<DoubleFactorization> witness;
  std::size_t cap = 0;
};

/// Decides whether every positive-degree arrow is a unique word in the
/// irreducible arrows.  Throws InvalidSystem when validate fails.
PathCategoryVerdict check_path_category(const GradedSystem& sys);

/// Names joined by "·"; an empty word prints as "1".
std::string word_string(const GradedSystem& sys, std::span<const ArrowId> word);

}  // namespace pps
