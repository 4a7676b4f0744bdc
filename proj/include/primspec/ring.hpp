#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace primspec {

/// Index of a ring element, 0..size-1.
using Element = std::uint32_t;

inline constexpr std::size_t kDefaultMaxElements = 1024;

// ---------------------------------------------------------------------------
// Constructor expressions
// ---------------------------------------------------------------------------

/// A validated ring constructor expression:
///   Zn(n) | GF(p^k) | Quot(base, poly) | Prod(spec, spec)
///
/// Quot moduli are stored with coefficients already reduced into the base
/// ring (integer c means c * 1_base), low degree first, monic.
struct RingSpec {
    enum class Kind { zn, gf, quot, prod };

    Kind kind = Kind::zn;
    std::uint64_t n = 0;                // Zn
    std::uint64_t p = 0, k = 0;         // GF(p^k)
    std::vector<std::uint64_t> modulus; // Quot, reduced integer coefficients
    std::shared_ptr<const RingSpec> left, right;  // Quot uses left as base

    /// Number of elements, saturating at UINT64_MAX.
    std::uint64_t element_count() const;
    /// Canonical text form; parse_ring_spec(render()) reproduces *this.
    std::string render() const;

    friend bool operator==(const RingSpec& a, const RingSpec& b);
};

/// Parse and validate a ring-spec string. Throws SpecSyntaxError or
/// ValidationError; throws CapExceeded when the ring would exceed max_elements.
RingSpec parse_ring_spec(std::string_view text, std::size_t max_elements = kDefaultMaxElements);

// ---------------------------------------------------------------------------
// Finite rings
// ---------------------------------------------------------------------------

/// A finite commutative ring with identity, materialized as operation tables.
/// Immutable after construction.
class FiniteRing {
public:
    std::size_t size() const noexcept { return size_; }
    Element zero() const noexcept { return zero_; }
    Element one() const noexcept { return one_; }

    Element add(Element a, Element b) const noexcept { return add_[a * size_ + b]; }
    Element mul(Element a, Element b) const noexcept { return mul_[a * size_ + b]; }
    Element neg(Element a) const noexcept { return neg_[a]; }
    Element sub(Element a, Element b) const noexcept { return add(a, neg(b)); }
    /// r^e for e >= 1 (square-and-multiply over the table).
    Element pow(Element r, std::uint64_t e) const noexcept;

    const RingSpec& spec() const noexcept { return spec_; }
    const std::string& label() const noexcept { return label_; }
    const std::vector<std::string>& element_names() const noexcept { return names_; }
    const std::string& name(Element e) const { return names_.at(e); }
    /// Look up an element by its display name (whitespace ignored).
    std::optional<Element> find_element(std::string_view name) const;

    /// Quot(Zn(p^s), h) with h irreducible mod p (and GF(p^k) itself).
    bool is_galois_ring() const noexcept { return galois_; }

    bool contains(Element e) const noexcept { return e < size_; }

private:
    friend class RingBuilder;
    FiniteRing() = default;

    std::size_t size_ = 0;
    Element zero_ = 0, one_ = 0;
    std::vector<Element> add_, mul_, neg_;
    std::vector<std::string> names_;
    RingSpec spec_;
    std::string label_;
    bool galois_ = false;
};

std::shared_ptr<const FiniteRing> build_ring(const RingSpec& spec,
                                             std::size_t max_elements = kDefaultMaxElements);

/// parse_ring_spec + build_ring.
std::shared_ptr<const FiniteRing> make_ring(std::string_view text,
                                            std::size_t max_elements = kDefaultMaxElements);

// ---------------------------------------------------------------------------
// Element-level queries
// ---------------------------------------------------------------------------

enum class ElementOp { add, mul, neg, pow };

/// Range-checked arithmetic. `args` holds one (neg, pow) or two (add, mul)
/// elements; pow takes its exponent (>= 1) from `exponent`.
/// Throws std::out_of_range / std::invalid_argument.
Element element_arithmetic(const FiniteRing& ring, ElementOp op, const std::vector<Element>& args,
                           std::uint64_t exponent = 1);

struct ElementFlags {
    bool is_unit = false;
    bool is_nilpotent = false;
    std::optional<std::uint64_t> nilpotency_index;
};

/// Unit by exhaustive inverse search; nilpotency by iterating powers until
/// zero or a repeat.
ElementFlags unit_and_nilpotent_flags(const FiniteRing& ring, Element r);

/// r, r^2, r^3, ... up to (excluding) the first repeated power.
std::vector<Element> power_orbit(const FiniteRing& ring, Element r);

struct AxiomCheck {
    bool ok = true;
    std::string failure;  // first violated axiom, empty when ok
};

/// Ring axioms over the tables. Associativity and distributivity are checked
/// exhaustively up to `exhaustive_limit` elements, on `samples` seeded
/// triples above it.
AxiomCheck verify_ring_axioms(const FiniteRing& ring, std::size_t exhaustive_limit = 64,
                              std::size_t samples = 200000, std::uint64_t seed = 0);

/// Monic irreducibility of a polynomial over F_p (coefficients low degree first).
bool is_irreducible_mod_p(const std::vector<std::uint64_t>& coeffs, std::uint64_t p);

}  // namespace primspec
