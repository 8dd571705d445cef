#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "gf2.hpp"
#include "linear_code.hpp"
#include "report.hpp"

namespace codeloop {

struct FactorSetSpace;

// Normalized two-variable function phi on a doubly even code, stored as a
// 2^k x 2^k bit table indexed by codeword indices. Normalization means the
// row and column of the zero word vanish. Entries are combined with index
// XOR throughout, which matches codeword XOR by construction of LinearCode.
class FactorSet {
public:
    FactorSet(LinearCode code, BitMatrix table)
        : code_(std::move(code)), table_(std::move(table)) {
        const std::size_t m = code_.num_codewords();
        if (table_.rows() != m || table_.cols() != m)
            fail(Errc::shape_mismatch,
                 "table is " + std::to_string(table_.rows()) + "x" + std::to_string(table_.cols()) +
                     ", code has " + std::to_string(m) + " words");
        for (std::size_t i = 0; i < m; ++i)
            if (table_.get(0, i) || table_.get(i, 0))
                fail(Errc::not_normalized,
                     "row/column of the zero word must vanish, offending index " + std::to_string(i));
    }

    const LinearCode& code() const { return code_; }
    int dim() const { return code_.dimension(); }
    std::size_t size() const { return code_.num_codewords(); }
    const BitMatrix& table() const { return table_; }
    bool verified() const { return verified_; }

    int at(std::size_t u, std::size_t v) const {
        const std::size_t m = size();
        if (u >= m || v >= m)
            fail(Errc::index_out_of_range, "entry (" + std::to_string(u) + "," + std::to_string(v) +
                                               ") of " + std::to_string(m) + "x" + std::to_string(m));
        return table_.get(u, v);
    }

    // Unchecked fast path for the exhaustive scans.
    int entry(std::size_t u, std::size_t v) const { return table_.get(u, v); }

    friend bool operator==(const FactorSet& a, const FactorSet& b) {
        return a.code_ == b.code_ && a.table_ == b.table_;
    }

private:
    LinearCode code_;
    BitMatrix table_;
    bool verified_ = false;

    friend bool is_factor_set(FactorSet&);
    friend FactorSet solve_factor_set(const LinearCode&);
    friend struct FactorSetSpace;
    friend FactorSetSpace factor_set_space(const LinearCode&);
};

inline FactorSet make_factor_table(LinearCode code, BitMatrix table) {
    return FactorSet(std::move(code), std::move(table));
}

// ---- factor set axioms --------------------------------------------------
//
// phi is a factor set when, over all codewords,
//   square:    phi(u,u)            = ||u||/4                   (mod 2)
//   symmetry:  phi(u,v)+phi(v,u)   = (u.v)/2                   (mod 2)
//   cocycle:   phi(u,v)+phi(u+v,w)+phi(v,w)+phi(u,v+w) = |u&v&w| (mod 2)

enum class Axiom { square, symmetry, cocycle };

inline const char* axiom_name(Axiom a) noexcept {
    switch (a) {
        case Axiom::square:   return "square";
        case Axiom::symmetry: return "symmetry";
        case Axiom::cocycle:  return "cocycle";
    }
    return "unknown";
}

struct AxiomViolation {
    Axiom axiom;
    std::size_t u = 0, v = 0, w = 0;  // codeword indices, unused slots stay 0
    int arity = 1;
    int lhs = 0;       // value of the phi side
    int required = 0;  // value demanded by the right-hand side
};

struct ViolationScan {
    static constexpr std::size_t cap = 128;
    std::vector<AxiomViolation> sample;  // at most `cap` entries
    std::uint64_t total = 0;
    std::uint64_t scanned = 0;
    bool clean() const { return total == 0; }
};

inline ViolationScan axiom_violations(const FactorSet& phi) {
    const LinearCode& code = phi.code();
    const DoublyEvenCheck de = is_doubly_even(code);
    if (!de.ok)
        fail(Errc::not_doubly_even, "axiom scan needs a doubly even code");

    ViolationScan scan;
    const std::size_t m = phi.size();
    auto record = [&scan](AxiomViolation v) {
        ++scan.total;
        if (scan.sample.size() < ViolationScan::cap) scan.sample.push_back(v);
    };

    for (std::size_t u = 0; u < m; ++u) {
        ++scan.scanned;
        const int lhs = phi.entry(u, u);
        const int rhs = quarter_mod2(std::popcount(code.word_bits(u)));
        if (lhs != rhs) record({Axiom::square, u, 0, 0, 1, lhs, rhs});
    }
    for (std::size_t u = 0; u < m; ++u) {
        for (std::size_t v = 0; v < m; ++v) {
            ++scan.scanned;
            const int lhs = phi.entry(u, v) ^ phi.entry(v, u);
            const int rhs = half_mod2(std::popcount(code.word_bits(u) & code.word_bits(v)));
            if (lhs != rhs) record({Axiom::symmetry, u, v, 0, 2, lhs, rhs});
        }
    }
    for (std::size_t u = 0; u < m; ++u) {
        for (std::size_t v = 0; v < m; ++v) {
            const std::uint64_t uv = code.word_bits(u) & code.word_bits(v);
            for (std::size_t w = 0; w < m; ++w) {
                ++scan.scanned;
                const int lhs = phi.entry(u, v) ^ phi.entry(u ^ v, w) ^ phi.entry(v, w) ^
                                phi.entry(u, v ^ w);
                const int rhs = std::popcount(uv & code.word_bits(w)) & 1;
                if (lhs != rhs) record({Axiom::cocycle, u, v, w, 3, lhs, rhs});
            }
        }
    }
    return scan;
}

inline bool is_factor_set(FactorSet& phi) {
    const bool ok = axiom_violations(phi).clean();
    phi.verified_ = ok;
    return ok;
}

// ---- weak linearity ------------------------------------------------------
//
//   lwl:  phi(u+v,u) = phi(u,u) + phi(v,u)   for all u,v
//   rwl:  phi(u,u+v) = phi(u,u) + phi(u,v)   for all u,v

struct WitnessPair {
    std::size_t u = 0, v = 0;
};

struct SideVerdict {
    bool holds = true;
    std::optional<WitnessPair> witness;  // first failing pair in scan order
    std::uint64_t failures = 0;
};

struct WeakLinearity {
    SideVerdict lwl, rwl;
    std::uint64_t scanned = 0;  // pairs per side
    bool wl() const { return lwl.holds && rwl.holds; }
};

inline WeakLinearity weak_linearity(const FactorSet& phi) {
    WeakLinearity result;
    const std::size_t m = phi.size();
    for (std::size_t u = 0; u < m; ++u) {
        for (std::size_t v = 0; v < m; ++v) {
            ++result.scanned;
            if (phi.entry(u ^ v, u) != (phi.entry(u, u) ^ phi.entry(v, u))) {
                ++result.lwl.failures;
                if (!result.lwl.witness) {
                    result.lwl.holds = false;
                    result.lwl.witness = WitnessPair{u, v};
                }
            }
            if (phi.entry(u, u ^ v) != (phi.entry(u, u) ^ phi.entry(u, v))) {
                ++result.rwl.failures;
                if (!result.rwl.witness) {
                    result.rwl.holds = false;
                    result.rwl.witness = WitnessPair{u, v};
                }
            }
        }
    }
    return result;
}

// ---- solving the axioms --------------------------------------------------

namespace detail {

// Unknowns are the (2^k - 1)^2 entries phi(u,v) with u,v != 0; entries in
// the zero row/column are the constant 0 and contribute no variable.
class FactorSetSystem {
public:
    explicit FactorSetSystem(const LinearCode& code)
        : code_(&code), m_(code.num_codewords()), side_(m_ - 1),
          system_(side_ * side_) {
        if (code.dimension() > 8)
            fail(Errc::dimension_too_large,
                 "solver handles dimension <= 8, got " + std::to_string(code.dimension()));
        if (!is_doubly_even(code).ok)
            fail(Errc::not_doubly_even, "cannot solve the axioms on a non doubly even code");
        build();
    }

    const Gf2System& system() const { return system_; }

    BitMatrix table_from(const std::vector<std::uint8_t>& assignment) const {
        BitMatrix table(m_, m_);
        for (std::size_t u = 1; u < m_; ++u)
            for (std::size_t v = 1; v < m_; ++v)
                table.set(u, v, assignment[var(u, v)]);
        return table;
    }

private:
    std::size_t var(std::size_t u, std::size_t v) const {
        return (u - 1) * side_ + (v - 1);
    }

    void push(std::vector<std::size_t>& terms, std::size_t u, std::size_t v) const {
        if (u != 0 && v != 0) terms.push_back(var(u, v));
    }

    void build() {
        std::vector<std::size_t> terms;
        auto emit = [&](bool rhs) {
            system_.add_equation(std::span<const std::size_t>(terms), rhs);
            terms.clear();
        };

        for (std::size_t u = 0; u < m_; ++u) {
            push(terms, u, u);
            emit(quarter_mod2(std::popcount(code_->word_bits(u))));
        }
        for (std::size_t u = 0; u < m_; ++u) {
            for (std::size_t v = u; v < m_; ++v) {
                push(terms, u, v);
                push(terms, v, u);
                emit(half_mod2(std::popcount(code_->word_bits(u) & code_->word_bits(v))));
            }
        }
        for (std::size_t u = 0; u < m_; ++u) {
            for (std::size_t v = 0; v < m_; ++v) {
                const std::uint64_t uv = code_->word_bits(u) & code_->word_bits(v);
                for (std::size_t w = 0; w < m_; ++w) {
                    push(terms, u, v);
                    push(terms, u ^ v, w);
                    push(terms, v, w);
                    push(terms, u, v ^ w);
                    emit(std::popcount(uv & code_->word_bits(w)) & 1);
                }
            }
        }
    }

    const LinearCode* code_;
    std::size_t m_, side_;
    Gf2System system_;
};

} // namespace detail

inline FactorSet solve_factor_set(const LinearCode& code) {
    detail::FactorSetSystem builder(code);
    if (!builder.system().consistent())
        fail(Errc::inconsistent_system, "the axiom equations have no solution");
    FactorSet phi(code, builder.table_from(builder.system().particular_solution()));
    if (!axiom_violations(phi).clean())
        fail(Errc::inconsistent_system, "solved table fails the axiom scan");
    phi.verified_ = true;
    return phi;
}

// The full solution space: one verified particular solution plus a basis of
// the homogeneous system, so every solution is particular XOR a basis combo.
struct FactorSetSpace {
    FactorSet particular;
    std::size_t nullity = 0;
    std::vector<BitMatrix> homogeneous_basis;
    std::size_t rank = 0;
    std::size_t unknowns = 0;
};

inline FactorSetSpace factor_set_space(const LinearCode& code) {
    detail::FactorSetSystem builder(code);
    if (!builder.system().consistent())
        fail(Errc::inconsistent_system, "the axiom equations have no solution");
    FactorSet particular(code, builder.table_from(builder.system().particular_solution()));
    if (!axiom_violations(particular).clean())
        fail(Errc::inconsistent_system, "solved table fails the axiom scan");
    particular.verified_ = true;

    FactorSetSpace space{std::move(particular)};
    space.rank = builder.system().rank();
    space.unknowns = builder.system().num_vars();
    for (const std::vector<std::uint8_t>& vec : builder.system().nullspace_basis())
        space.homogeneous_basis.push_back(builder.table_from(vec));
    space.nullity = space.homogeneous_basis.size();
    return space;
}

// Uniform random normalized table (not usually a factor set). Entries are
// drawn row major, so the result is reproducible from the seed.
inline FactorSet random_normalized_phi(LinearCode code, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::size_t m = code.num_codewords();
    BitMatrix table(m, m);
    for (std::size_t u = 1; u < m; ++u)
        for (std::size_t v = 1; v < m; ++v) table.set(u, v, rng() & 1);
    return FactorSet(std::move(code), std::move(table));
}

// ---- congruences that follow from weak linearity --------------------------

enum class DerivedCongruence { lwl_cong, rwl_cong, wl_sum, wl_equiv };

inline const char* derived_congruence_name(DerivedCongruence c) noexcept {
    switch (c) {
        case DerivedCongruence::lwl_cong: return "LWL_CONG";
        case DerivedCongruence::rwl_cong: return "RWL_CONG";
        case DerivedCongruence::wl_sum:   return "WL_SUM";
        case DerivedCongruence::wl_equiv: return "WL_EQUIV";
    }
    return "unknown";
}

// Scans one derived congruence over all ordered pairs:
//   LWL_CONG: phi(u+v,u) = phi(u,u) + (u.v)/2 + phi(u,v)     (needs lwl)
//   RWL_CONG: phi(u,u+v) = phi(u,u) + (u.v)/2 + phi(v,u)     (needs rwl)
//   WL_SUM:   phi(u+v,u) + phi(u,u+v) = (u.v)/2              (needs wl)
//   WL_EQUIV: phi(u,u+v) = phi(u+v,u)  iff  phi(u,v) = phi(v,u)  (needs wl)
inline CheckReport derived_congruence_check(const FactorSet& phi, DerivedCongruence which) {
    if (!axiom_violations(phi).clean())
        fail(Errc::precondition_not_met, "phi does not satisfy the factor set axioms");
    const WeakLinearity wl = weak_linearity(phi);
    switch (which) {
        case DerivedCongruence::lwl_cong:
            if (!wl.lwl.holds) fail(Errc::precondition_not_met, "phi is not lwl");
            break;
        case DerivedCongruence::rwl_cong:
            if (!wl.rwl.holds) fail(Errc::precondition_not_met, "phi is not rwl");
            break;
        case DerivedCongruence::wl_sum:
        case DerivedCongruence::wl_equiv:
            if (!wl.wl()) fail(Errc::precondition_not_met, "phi is not wl");
            break;
    }

    const LinearCode& code = phi.code();
    CheckReport report{derived_congruence_name(which)};
    const std::size_t m = phi.size();
    for (std::size_t u = 0; u < m; ++u) {
        for (std::size_t v = 0; v < m; ++v) {
            ++report.scanned;
            const int half = half_mod2(std::popcount(code.word_bits(u) & code.word_bits(v)));
            bool ok = true;
            switch (which) {
                case DerivedCongruence::lwl_cong:
                    ok = phi.entry(u ^ v, u) == (phi.entry(u, u) ^ half ^ phi.entry(u, v));
                    break;
                case DerivedCongruence::rwl_cong:
                    ok = phi.entry(u, u ^ v) == (phi.entry(u, u) ^ half ^ phi.entry(v, u));
                    break;
                case DerivedCongruence::wl_sum:
                    ok = (phi.entry(u ^ v, u) ^ phi.entry(u, u ^ v)) == half;
                    break;
                case DerivedCongruence::wl_equiv:
                    ok = (phi.entry(u, u ^ v) == phi.entry(u ^ v, u)) ==
                         (phi.entry(u, v) == phi.entry(v, u));
                    break;
            }
            if (!ok) {
                report.holds = false;
                report.witness = {u, v};
                return report;
            }
        }
    }
    return report;
}

} // namespace codeloop
