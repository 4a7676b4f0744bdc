#include "primspec/ring.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <random>
#include <sstream>

#include "primspec/errors.hpp"
#include "primspec/numtheory.hpp"

namespace primspec {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > kSaturated / a) return kSaturated;
    return a * b;
}

std::uint64_t sat_pow(std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) {
        r = sat_mul(r, a);
        if (r == kSaturated) break;
    }
    return r;
}

// Polynomials over F_p, low degree first, no trailing zeros (empty = 0).
using PolyP = std::vector<std::uint64_t>;

void trim(PolyP& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f by monic g over F_p.
PolyP rem_monic(PolyP f, const PolyP& g, std::uint64_t p) {
    trim(f);
    const std::size_t dg = g.size() - 1;
    while (f.size() >= g.size()) {
        const std::uint64_t lead = f.back();
        const std::size_t shift = f.size() - 1 - dg;
        for (std::size_t i = 0; i <= dg; ++i) {
            f[shift + i] = (f[shift + i] + (p - lead * g[i] % p)) % p;
        }
        trim(f);
    }
    return f;
}

}  // namespace

bool is_irreducible_mod_p(const std::vector<std::uint64_t>& coeffs, std::uint64_t p) {
    PolyP f;
    for (auto c : coeffs) f.push_back(c % p);
    trim(f);
    if (f.size() < 2) return false;
    const std::size_t d = f.size() - 1;
    if (d == 1) return true;
    // Brute force: no monic divisor of degree 1..d/2.
    for (std::size_t dg = 1; dg <= d / 2; ++dg) {
        const std::uint64_t count = sat_pow(p, dg);
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            PolyP g(dg + 1, 0);
            std::uint64_t v = idx;
            for (std::size_t i = 0; i < dg; ++i) {
                g[i] = v % p;
                v /= p;
            }
            g[dg] = 1;
            if (rem_monic(f, g, p).empty()) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// RingSpec
// ---------------------------------------------------------------------------

std::uint64_t RingSpec::element_count() const {
    switch (kind) {
        case Kind::zn:
            return n;
        case Kind::gf:
            return sat_pow(p, k);
        case Kind::quot:
            return sat_pow(left->element_count(), modulus.size() - 1);
        case Kind::prod:
            return sat_mul(left->element_count(), right->element_count());
    }
    return 0;
}

namespace {

std::string render_modulus(const std::vector<std::uint64_t>& m) {
    std::string out;
    for (std::size_t i = m.size(); i-- > 0;) {
        const auto c = m[i];
        if (c == 0) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += std::to_string(c);
            continue;
        }
        if (c != 1) out += std::to_string(c);
        out += 'x';
        if (i > 1) out += '^' + std::to_string(i);
    }
    return out;
}

}  // namespace

std::string RingSpec::render() const {
    switch (kind) {
        case Kind::zn:
            return "Zn(" + std::to_string(n) + ")";
        case Kind::gf:
            return k == 1 ? "GF(" + std::to_string(p) + ")"
                          : "GF(" + std::to_string(p) + "^" + std::to_string(k) + ")";
        case Kind::quot:
            return "Quot(" + left->render() + ", " + render_modulus(modulus) + ")";
        case Kind::prod:
            return "Prod(" + left->render() + ", " + right->render() + ")";
    }
    return {};
}

bool operator==(const RingSpec& a, const RingSpec& b) {
    if (a.kind != b.kind) return false;
    switch (a.kind) {
        case RingSpec::Kind::zn:
            return a.n == b.n;
        case RingSpec::Kind::gf:
            return a.p == b.p && a.k == b.k;
        case RingSpec::Kind::quot:
            return a.modulus == b.modulus && *a.left == *b.left;
        case RingSpec::Kind::prod:
            return *a.left == *b.left && *a.right == *b.right;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

class SpecParser {
public:
    explicit SpecParser(std::string_view text) : text_(text) {}

    RingSpec parse() {
        RingSpec s = parse_spec();
        skip_ws();
        if (pos_ != text_.size()) throw SpecSyntaxError("unexpected trailing input", pos_);
        return s;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c)
            throw SpecSyntaxError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    std::string identifier() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    std::uint64_t integer() {
        skip_ws();
        std::size_t start = pos_;
        std::uint64_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            const std::uint64_t d = static_cast<std::uint64_t>(text_[pos_] - '0');
            if (v > (kSaturated - d) / 10) throw SpecSyntaxError("integer too large", start);
            v = v * 10 + d;
            ++pos_;
        }
        if (pos_ == start) throw SpecSyntaxError("expected integer", start);
        return v;
    }

    RingSpec parse_spec() {
        skip_ws();
        const std::size_t at = pos_;
        const std::string head = identifier();
        RingSpec s;
        if (head == "Zn") {
            expect('(');
            s.kind = RingSpec::Kind::zn;
            s.n = integer();
            expect(')');
            if (s.n < 2) throw ValidationError("Zn(" + std::to_string(s.n) + "): n must be at least 2");
        } else if (head == "GF") {
            expect('(');
            s.kind = RingSpec::Kind::gf;
            const std::uint64_t base = integer();
            if (peek('^')) {
                expect('^');
                s.p = base;
                s.k = integer();
                if (!is_prime_u64(s.p))
                    throw ValidationError("GF(" + std::to_string(base) + "^" + std::to_string(s.k) +
                                          "): " + std::to_string(base) + " is not prime");
                if (s.k < 1) throw ValidationError("GF: exponent must be at least 1");
            } else {
                auto pp = prime_power(base);
                if (!pp) throw ValidationError("GF(" + std::to_string(base) + "): order is not a prime power");
                s.p = pp->first;
                s.k = pp->second;
            }
            expect(')');
        } else if (head == "Quot") {
            expect('(');
            s.kind = RingSpec::Kind::quot;
            const std::size_t base_at = pos_;
            auto base = std::make_shared<RingSpec>(parse_spec());
            if (base->kind != RingSpec::Kind::zn && base->kind != RingSpec::Kind::gf)
                throw ValidationError("Quot base must be Zn or GF (at position " + std::to_string(base_at) + ")");
            expect(',');
            s.modulus = parse_poly(*base);
            expect(')');
            s.left = std::move(base);
        } else if (head == "Prod") {
            expect('(');
            s.kind = RingSpec::Kind::prod;
            s.left = std::make_shared<RingSpec>(parse_spec());
            expect(',');
            s.right = std::make_shared<RingSpec>(parse_spec());
            expect(')');
        } else {
            throw SpecSyntaxError(head.empty() ? "expected ring constructor" : "unknown constructor '" + head + "'", at);
        }
        return s;
    }

    // Integer-coefficient polynomial in x; coefficients reduced into the base.
    std::vector<std::uint64_t> parse_poly(const RingSpec& base) {
        const std::uint64_t modv = base.kind == RingSpec::Kind::zn ? base.n : base.p;
        std::map<std::uint64_t, std::uint64_t> terms;  // exponent -> coefficient mod modv
        skip_ws();
        const std::size_t start = pos_;
        bool first = true;
        for (;;) {
            bool negative = false;
            skip_ws();
            if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
                negative = text_[pos_] == '-';
                ++pos_;
            } else if (!first) {
                break;
            }
            first = false;
            skip_ws();
            std::uint64_t coef = 1;
            bool have_coef = false;
            if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                coef = integer();
                have_coef = true;
                if (peek('*')) expect('*');
            }
            std::uint64_t exponent = 0;
            if (peek('x')) {
                ++pos_;
                exponent = 1;
                if (peek('^')) {
                    expect('^');
                    exponent = integer();
                }
            } else if (!have_coef) {
                throw SpecSyntaxError("expected polynomial term", pos_);
            }
            if (exponent > 64) throw ValidationError("modulus degree too large");
            std::uint64_t c = coef % modv;
            if (negative) c = (modv - c) % modv;
            terms[exponent] = (terms[exponent] + c) % modv;
        }
        if (pos_ == start) throw SpecSyntaxError("expected polynomial", start);
        std::vector<std::uint64_t> coeffs;
        for (auto [e, c] : terms) {
            if (coeffs.size() <= e) coeffs.resize(e + 1, 0);
            coeffs[e] = c;
        }
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
        if (coeffs.size() < 2) throw ValidationError("Quot modulus must have degree at least 1");
        if (coeffs.back() != 1) throw ValidationError("Quot modulus must be monic");
        return coeffs;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

RingSpec parse_ring_spec(std::string_view text, std::size_t max_elements) {
    RingSpec s = SpecParser(text).parse();
    const auto count = s.element_count();
    if (count > max_elements)
        throw CapExceeded(s.render() + " has " + (count == kSaturated ? std::string("too many") : std::to_string(count)) +
                          " elements, cap is " + std::to_string(max_elements));
    return s;
}

// ---------------------------------------------------------------------------
// Builder
// ---------------------------------------------------------------------------

class RingBuilder {
public:
    static std::shared_ptr<const FiniteRing> build(const RingSpec& spec) {
        auto ring = std::shared_ptr<FiniteRing>(new FiniteRing(construct(spec)));
        return ring;
    }

private:
    static FiniteRing construct(const RingSpec& spec) {
        FiniteRing r;
        switch (spec.kind) {
            case RingSpec::Kind::zn:
                r = cyclic(spec.n);
                break;
            case RingSpec::Kind::gf:
                if (spec.k == 1) {
                    r = cyclic(spec.p);
                } else {
                    r = quotient(cyclic(spec.p), lowest_irreducible(spec.p, spec.k), "a");
                }
                r.galois_ = true;
                break;
            case RingSpec::Kind::quot: {
                FiniteRing base = construct(*spec.left);
                std::vector<Element> h(spec.modulus.begin(), spec.modulus.end());
                r = quotient(base, h, "x");
                if (spec.left->kind == RingSpec::Kind::gf) {
                    r.galois_ = false;
                } else if (auto pp = prime_power(spec.left->n)) {
                    r.galois_ = is_irreducible_mod_p(spec.modulus, pp->first);
                }
                break;
            }
            case RingSpec::Kind::prod:
                r = product(construct(*spec.left), construct(*spec.right));
                break;
        }
        r.spec_ = spec;
        r.label_ = spec.render();
        return r;
    }

    static FiniteRing cyclic(std::uint64_t n) {
        FiniteRing r;
        const auto sz = static_cast<std::size_t>(n);
        r.size_ = sz;
        r.add_.resize(sz * sz);
        r.mul_.resize(sz * sz);
        r.neg_.resize(sz);
        for (std::size_t a = 0; a < sz; ++a) {
            r.neg_[a] = static_cast<Element>((sz - a) % sz);
            for (std::size_t b = 0; b < sz; ++b) {
                r.add_[a * sz + b] = static_cast<Element>((a + b) % sz);
                r.mul_[a * sz + b] = static_cast<Element>(a * b % sz);
            }
        }
        r.zero_ = 0;
        r.one_ = 1;
        r.names_.reserve(sz);
        for (std::size_t a = 0; a < sz; ++a) r.names_.push_back(std::to_string(a));
        return r;
    }

    // Lexicographically smallest monic irreducible polynomial of degree k over F_p.
    static std::vector<Element> lowest_irreducible(std::uint64_t p, std::uint64_t k) {
        const std::uint64_t count = sat_pow(p, k);
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::vector<std::uint64_t> f(k + 1, 0);
            std::uint64_t v = idx;
            for (std::uint64_t i = 0; i < k; ++i) {
                f[i] = v % p;
                v /= p;
            }
            f[k] = 1;
            if (is_irreducible_mod_p(f, p)) return {f.begin(), f.end()};
        }
        throw std::logic_error("no irreducible polynomial found");
    }

    static std::string poly_name(const FiniteRing& base, const std::vector<Element>& digits, const std::string& var) {
        std::string out;
        for (std::size_t i = digits.size(); i-- > 0;) {
            const Element c = digits[i];
            if (c == base.zero_) continue;
            if (!out.empty()) out += '+';
            const std::string& cn = base.names_[c];
            if (i == 0) {
                out += cn;
                continue;
            }
            if (c != base.one_) out += cn.find('+') != std::string::npos ? "(" + cn + ")" : cn;
            out += var;
            if (i > 1) out += '^' + std::to_string(i);
        }
        return out.empty() ? base.names_[base.zero_] : out;
    }

    // base[var]/(h), h monic given by base-element coefficients, low degree first.
    static FiniteRing quotient(const FiniteRing& base, const std::vector<Element>& h, const std::string& var) {
        const std::size_t bs = base.size_;
        const std::size_t d = h.size() - 1;
        std::size_t sz = 1;
        for (std::size_t i = 0; i < d; ++i) sz *= bs;

        std::vector<std::vector<Element>> digits(sz, std::vector<Element>(d));
        for (std::size_t e = 0; e < sz; ++e) {
            std::size_t v = e;
            for (std::size_t i = 0; i < d; ++i) {
                digits[e][i] = static_cast<Element>(v % bs);
                v /= bs;
            }
        }
        auto encode = [&](const std::vector<Element>& dg) {
            std::size_t v = 0;
            for (std::size_t i = d; i-- > 0;) v = v * bs + dg[i];
            return static_cast<Element>(v);
        };

        FiniteRing r;
        r.size_ = sz;
        r.add_.resize(sz * sz);
        r.mul_.resize(sz * sz);
        r.neg_.resize(sz);
        std::vector<Element> tmp(d), prod(2 * d - 1);
        for (std::size_t a = 0; a < sz; ++a) {
            for (std::size_t i = 0; i < d; ++i) tmp[i] = base.neg(digits[a][i]);
            r.neg_[a] = encode(tmp);
            for (std::size_t b = 0; b < sz; ++b) {
                for (std::size_t i = 0; i < d; ++i) tmp[i] = base.add(digits[a][i], digits[b][i]);
                r.add_[a * sz + b] = encode(tmp);

                std::fill(prod.begin(), prod.end(), base.zero_);
                for (std::size_t i = 0; i < d; ++i)
                    for (std::size_t j = 0; j < d; ++j)
                        prod[i + j] = base.add(prod[i + j], base.mul(digits[a][i], digits[b][j]));
                // Reduce modulo the monic modulus from the top down.
                for (std::size_t top = prod.size(); top-- > d;) {
                    const Element c = prod[top];
                    if (c == base.zero_) continue;
                    const std::size_t shift = top - d;
                    for (std::size_t j = 0; j <= d; ++j)
                        prod[shift + j] = base.sub(prod[shift + j], base.mul(c, h[j]));
                }
                std::copy(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(d), tmp.begin());
                r.mul_[a * sz + b] = encode(tmp);
            }
        }
        std::vector<Element> unit(d, base.zero_);
        std::vector<Element> zero(d, base.zero_);
        unit[0] = base.one_;
        r.zero_ = encode(zero);
        r.one_ = encode(unit);
        r.names_.reserve(sz);
        for (std::size_t e = 0; e < sz; ++e) r.names_.push_back(poly_name(base, digits[e], var));
        return r;
    }

    static FiniteRing product(const FiniteRing& a, const FiniteRing& b) {
        const std::size_t na = a.size_, nb = b.size_, sz = na * nb;
        FiniteRing r;
        r.size_ = sz;
        r.add_.resize(sz * sz);
        r.mul_.resize(sz * sz);
        r.neg_.resize(sz);
        for (std::size_t x = 0; x < sz; ++x) {
            const Element xa = static_cast<Element>(x / nb), xb = static_cast<Element>(x % nb);
            r.neg_[x] = static_cast<Element>(a.neg(xa) * nb + b.neg(xb));
            for (std::size_t y = 0; y < sz; ++y) {
                const Element ya = static_cast<Element>(y / nb), yb = static_cast<Element>(y % nb);
                r.add_[x * sz + y] = static_cast<Element>(a.add(xa, ya) * nb + b.add(xb, yb));
                r.mul_[x * sz + y] = static_cast<Element>(a.mul(xa, ya) * nb + b.mul(xb, yb));
            }
        }
        r.zero_ = static_cast<Element>(a.zero_ * nb + b.zero_);
        r.one_ = static_cast<Element>(a.one_ * nb + b.one_);
        r.names_.reserve(sz);
        for (std::size_t x = 0; x < sz; ++x)
            r.names_.push_back("(" + a.names_[x / nb] + "," + b.names_[x % nb] + ")");
        return r;
    }
};

std::shared_ptr<const FiniteRing> build_ring(const RingSpec& spec, std::size_t max_elements) {
    const auto count = spec.element_count();
    if (count > max_elements)
        throw CapExceeded(spec.render() + " exceeds the element cap of " + std::to_string(max_elements));
    return RingBuilder::build(spec);
}

std::shared_ptr<const FiniteRing> make_ring(std::string_view text, std::size_t max_elements) {
    return build_ring(parse_ring_spec(text, max_elements), max_elements);
}

// ---------------------------------------------------------------------------
// FiniteRing members and element queries
// ---------------------------------------------------------------------------

Element FiniteRing::pow(Element r, std::uint64_t e) const noexcept {
    Element result = one_;
    Element base = r;
    while (e) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

std::optional<Element> FiniteRing::find_element(std::string_view name) const {
    std::string key;
    for (char c : name)
        if (!std::isspace(static_cast<unsigned char>(c))) key += c;
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == key) return static_cast<Element>(i);
    return std::nullopt;
}

Element element_arithmetic(const FiniteRing& ring, ElementOp op, const std::vector<Element>& args,
                           std::uint64_t exponent) {
    const std::size_t arity = (op == ElementOp::add || op == ElementOp::mul) ? 2 : 1;
    if (args.size() != arity) throw std::invalid_argument("wrong number of operands");
    for (auto a : args)
        if (!ring.contains(a))
            throw std::out_of_range("element index " + std::to_string(a) + " out of range for " + ring.label());
    switch (op) {
        case ElementOp::add:
            return ring.add(args[0], args[1]);
        case ElementOp::mul:
            return ring.mul(args[0], args[1]);
        case ElementOp::neg:
            return ring.neg(args[0]);
        case ElementOp::pow:
            if (exponent < 1) throw std::invalid_argument("pow exponent must be at least 1");
            return ring.pow(args[0], exponent);
    }
    return 0;
}

std::vector<Element> power_orbit(const FiniteRing& ring, Element r) {
    std::vector<Element> orbit;
    std::vector<bool> seen(ring.size(), false);
    Element x = r;
    while (!seen[x]) {
        seen[x] = true;
        orbit.push_back(x);
        x = ring.mul(x, r);
    }
    return orbit;
}

ElementFlags unit_and_nilpotent_flags(const FiniteRing& ring, Element r) {
    if (!ring.contains(r)) throw std::out_of_range("element index " + std::to_string(r) + " out of range");
    ElementFlags f;
    for (Element s = 0; s < ring.size(); ++s) {
        if (ring.mul(r, s) == ring.one()) {
            f.is_unit = true;
            break;
        }
    }
    const auto orbit = power_orbit(ring, r);
    for (std::size_t i = 0; i < orbit.size(); ++i) {
        if (orbit[i] == ring.zero()) {
            f.is_nilpotent = true;
            f.nilpotency_index = i + 1;
            break;
        }
    }
    return f;
}

AxiomCheck verify_ring_axioms(const FiniteRing& ring, std::size_t exhaustive_limit, std::size_t samples,
                              std::uint64_t seed) {
    const auto n = static_cast<Element>(ring.size());
    const Element z = ring.zero(), o = ring.one();
    auto fail = [](std::string what) { return AxiomCheck{false, std::move(what)}; };
    if (z == o) return fail("identity equals zero");
    for (Element a = 0; a < n; ++a) {
        if (ring.add(a, z) != a) return fail("additive identity");
        if (ring.mul(a, o) != a) return fail("multiplicative identity");
        if (ring.add(a, ring.neg(a)) != z) return fail("additive inverse");
        for (Element b = 0; b < n; ++b) {
            if (ring.add(a, b) != ring.add(b, a)) return fail("additive commutativity");
            if (ring.mul(a, b) != ring.mul(b, a)) return fail("multiplicative commutativity");
        }
    }
    auto triple = [&](Element a, Element b, Element c) -> std::string {
        if (ring.add(ring.add(a, b), c) != ring.add(a, ring.add(b, c))) return "additive associativity";
        if (ring.mul(ring.mul(a, b), c) != ring.mul(a, ring.mul(b, c))) return "multiplicative associativity";
        if (ring.mul(a, ring.add(b, c)) != ring.add(ring.mul(a, b), ring.mul(a, c))) return "distributivity";
        return {};
    };
    if (n <= exhaustive_limit) {
        for (Element a = 0; a < n; ++a)
            for (Element b = 0; b < n; ++b)
                for (Element c = 0; c < n; ++c)
                    if (auto w = triple(a, b, c); !w.empty()) return fail(w);
    } else {
        std::mt19937_64 rng(seed);
        for (std::size_t i = 0; i < samples; ++i) {
            const auto a = static_cast<Element>(rng() % n), b = static_cast<Element>(rng() % n),
                       c = static_cast<Element>(rng() % n);
            if (auto w = triple(a, b, c); !w.empty()) return fail(w);
        }
    }
    return {};
}

}  // namespace primspec
