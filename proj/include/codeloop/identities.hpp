#pragma once

#include <array>
#include <cstdint>
#include <utility>

#include "loop.hpp"

namespace codeloop {

// ---- loop identity catalog -------------------------------------------------
//
// Each identity is an equation in up to three loop variables, evaluated
// strictly through mul and the two divisions so the check is independent of
// any table-level shortcut.

enum class IdentityId {
    lc1, lc2, lc3,          // (xx)(yz)=(x(xy))z, (x(xy))z=x(x(yz)), ((xx)y)z=x(x(yz))
    rc1, rc2, rc3,          // (yz)(xx)=y((zx)x), ((yz)x)x=y((zx)x), ((yz)x)x=y(z(xx))
    c_loop,                 // y(x(xz)) = ((yx)x)z
    lb, rb,                 // Bol: x(y(xz))=(x(yx))z, ((zx)y)x=z((xy)x)
    moufang1, moufang2,     // (xy)(zx)=x((yz)x), (xy)(zx)=(x(yz))x
    moufang3, moufang4,     // x(y(xz))=((xy)x)z, ((zx)y)x=z(x(yx))
    lcc, rcc,               // z(yx)=((zy)/z)(zx), (xy)z=(xz)(z\(yz))
    extra1, extra2, extra3, // ((xy)z)x=x(y(zx)), (xy)(xz)=x((yx)z), (yx)(zx)=(y(xz))x
    la, ra, flex,           // x(xy)=(xx)y, (yx)x=y(xx), x(yx)=(xy)x
};

constexpr std::array<IdentityId, 21> identity_catalog = {
    IdentityId::lc1,      IdentityId::lc2,      IdentityId::lc3,   IdentityId::rc1,
    IdentityId::rc2,      IdentityId::rc3,      IdentityId::c_loop, IdentityId::lb,
    IdentityId::rb,       IdentityId::moufang1, IdentityId::moufang2,
    IdentityId::moufang3, IdentityId::moufang4, IdentityId::lcc,   IdentityId::rcc,
    IdentityId::extra1,   IdentityId::extra2,   IdentityId::extra3, IdentityId::la,
    IdentityId::ra,       IdentityId::flex,
};

constexpr const char* identity_name(IdentityId id) noexcept {
    switch (id) {
        case IdentityId::lc1:      return "LC1";
        case IdentityId::lc2:      return "LC2";
        case IdentityId::lc3:      return "LC3";
        case IdentityId::rc1:      return "RC1";
        case IdentityId::rc2:      return "RC2";
        case IdentityId::rc3:      return "RC3";
        case IdentityId::c_loop:   return "CLOOP";
        case IdentityId::lb:       return "LB";
        case IdentityId::rb:       return "RB";
        case IdentityId::moufang1: return "MOUFANG1";
        case IdentityId::moufang2: return "MOUFANG2";
        case IdentityId::moufang3: return "MOUFANG3";
        case IdentityId::moufang4: return "MOUFANG4";
        case IdentityId::lcc:      return "LCC";
        case IdentityId::rcc:      return "RCC";
        case IdentityId::extra1:   return "EXTRA1";
        case IdentityId::extra2:   return "EXTRA2";
        case IdentityId::extra3:   return "EXTRA3";
        case IdentityId::la:       return "LA";
        case IdentityId::ra:       return "RA";
        case IdentityId::flex:     return "FLEX";
    }
    return "unknown";
}

constexpr int identity_arity(IdentityId id) noexcept {
    switch (id) {
        case IdentityId::la:
        case IdentityId::ra:
        case IdentityId::flex:
            return 2;
        default:
            return 3;
    }
}

inline std::pair<LoopElement, LoopElement> eval_identity(const CodeLoop& L, IdentityId id,
                                                         LoopElement x, LoopElement y,
                                                         LoopElement z) {
    auto m = [&L](LoopElement a, LoopElement b) { return L.mul(a, b); };
    switch (id) {
        case IdentityId::lc1:
            return {m(m(x, x), m(y, z)), m(m(x, m(x, y)), z)};
        case IdentityId::lc2:
            return {m(m(x, m(x, y)), z), m(x, m(x, m(y, z)))};
        case IdentityId::lc3:
            return {m(m(m(x, x), y), z), m(x, m(x, m(y, z)))};
        case IdentityId::rc1:
            return {m(m(y, z), m(x, x)), m(y, m(m(z, x), x))};
        case IdentityId::rc2:
            return {m(m(m(y, z), x), x), m(y, m(m(z, x), x))};
        case IdentityId::rc3:
            return {m(m(m(y, z), x), x), m(y, m(z, m(x, x)))};
        case IdentityId::c_loop:
            return {m(y, m(x, m(x, z))), m(m(m(y, x), x), z)};
        case IdentityId::lb:
            return {m(x, m(y, m(x, z))), m(m(x, m(y, x)), z)};
        case IdentityId::rb:
            return {m(m(m(z, x), y), x), m(z, m(m(x, y), x))};
        case IdentityId::moufang1:
            return {m(m(x, y), m(z, x)), m(x, m(m(y, z), x))};
        case IdentityId::moufang2:
            return {m(m(x, y), m(z, x)), m(m(x, m(y, z)), x)};
        case IdentityId::moufang3:
            return {m(x, m(y, m(x, z))), m(m(m(x, y), x), z)};
        case IdentityId::moufang4:
            return {m(m(m(z, x), y), x), m(z, m(x, m(y, x)))};
        case IdentityId::lcc:
            return {m(z, m(y, x)), m(L.right_div(z, m(z, y)), m(z, x))};
        case IdentityId::rcc:
            return {m(m(x, y), z), m(m(x, z), L.left_div(z, m(y, z)))};
        case IdentityId::extra1:
            return {m(m(m(x, y), z), x), m(x, m(y, m(z, x)))};
        case IdentityId::extra2:
            return {m(m(x, y), m(x, z)), m(x, m(m(y, x), z))};
        case IdentityId::extra3:
            return {m(m(y, x), m(z, x)), m(m(y, m(x, z)), x)};
        case IdentityId::la:
            return {m(x, m(x, y)), m(m(x, x), y)};
        case IdentityId::ra:
            return {m(m(y, x), x), m(y, m(x, x))};
        case IdentityId::flex:
            return {m(x, m(y, x)), m(m(x, y), x)};
    }
    fail(Errc::index_out_of_range, "unknown identity");
}

// Exhaustive scan over all element tuples, first counterexample in
// lexicographic element-index order.
inline CheckReport check_identity(const CodeLoop& loop, IdentityId id) {
    const std::size_t m = loop.order();
    if (m > CodeLoop::max_scan_order)
        fail(Errc::order_too_large, "order " + std::to_string(m) + " exceeds scan cap");
    CheckReport report{identity_name(id)};
    const int arity = identity_arity(id);
    const LoopElement e0 = loop.identity();
    for (std::size_t i = 0; i < m; ++i) {
        const LoopElement x = loop.element(i);
        for (std::size_t j = 0; j < m; ++j) {
            const LoopElement y = loop.element(j);
            if (arity == 2) {
                ++report.scanned;
                const auto [lhs, rhs] = eval_identity(loop, id, x, y, e0);
                if (!(lhs == rhs)) {
                    report.holds = false;
                    report.witness = {i, j};
                    return report;
                }
                continue;
            }
            for (std::size_t l = 0; l < m; ++l) {
                ++report.scanned;
                const auto [lhs, rhs] = eval_identity(loop, id, x, y, loop.element(l));
                if (!(lhs == rhs)) {
                    report.holds = false;
                    report.witness = {i, j, l};
                    return report;
                }
            }
        }
    }
    return report;
}

// ---- table-level discriminants ----------------------------------------------
//
// Each discriminant is a GF(2) sum of phi entries whose vanishing over all
// codeword tuples matches one of the loop identities above. D and E1..E3
// are published forms; the _DIRECT variants come from expanding the matching
// identity with the multiplication rule and nothing else. D differs from
// D_DIRECT in one term (phi(v+u,v) vs phi(v+u,u)), a probable misprint in
// the published form, so both are kept and compared.

enum class DiscriminantId {
    a1, a2, a3,
    b1, b2, b3,
    d_published, d_direct,
    e1, e2, e3,
    e1_direct, e2_direct, e3_direct,
};

constexpr std::array<DiscriminantId, 14> discriminant_catalog = {
    DiscriminantId::a1,        DiscriminantId::a2,        DiscriminantId::a3,
    DiscriminantId::b1,        DiscriminantId::b2,        DiscriminantId::b3,
    DiscriminantId::d_published, DiscriminantId::d_direct,
    DiscriminantId::e1,        DiscriminantId::e2,        DiscriminantId::e3,
    DiscriminantId::e1_direct, DiscriminantId::e2_direct, DiscriminantId::e3_direct,
};

constexpr const char* discriminant_name(DiscriminantId id) noexcept {
    switch (id) {
        case DiscriminantId::a1:          return "A1";
        case DiscriminantId::a2:          return "A2";
        case DiscriminantId::a3:          return "A3";
        case DiscriminantId::b1:          return "B1";
        case DiscriminantId::b2:          return "B2";
        case DiscriminantId::b3:          return "B3";
        case DiscriminantId::d_published: return "D";
        case DiscriminantId::d_direct:    return "D_DIRECT";
        case DiscriminantId::e1:          return "E1";
        case DiscriminantId::e2:          return "E2";
        case DiscriminantId::e3:          return "E3";
        case DiscriminantId::e1_direct:   return "E1_DIRECT";
        case DiscriminantId::e2_direct:   return "E2_DIRECT";
        case DiscriminantId::e3_direct:   return "E3_DIRECT";
    }
    return "unknown";
}

constexpr int discriminant_arity(DiscriminantId id) noexcept {
    switch (id) {
        case DiscriminantId::a1:
        case DiscriminantId::b1:
            return 2;
        default:
            return 3;
    }
}

// Value at one codeword-index tuple; the arity-2 names A1 and B1 ignore w.
inline int discriminant_value(const FactorSet& phi, DiscriminantId id, std::size_t u,
                              std::size_t v, std::size_t w) {
    const std::size_t m = phi.size();
    if (u >= m || v >= m || w >= m)
        fail(Errc::index_out_of_range, "discriminant tuple out of range");
    auto p = [&phi](std::size_t a, std::size_t b) { return phi.entry(a, b); };
    switch (id) {
        case DiscriminantId::a1:
            return p(u, u ^ v) ^ p(u, v) ^ p(u, u);
        case DiscriminantId::a2:
            return p(u, v) ^ p(u, u ^ v) ^ p(u, v ^ w) ^ p(u, u ^ v ^ w);
        case DiscriminantId::a3:
            return p(u, u) ^ p(u, v ^ w) ^ p(u, u ^ v ^ w);
        case DiscriminantId::b1:
            return p(u, u) ^ p(v, u) ^ p(v ^ u, u);
        case DiscriminantId::b2:
            return p(w, u) ^ p(w ^ u, u) ^ p(v ^ w, u) ^ p(v ^ w ^ u, u);
        case DiscriminantId::b3:
            return p(u, u) ^ p(v ^ w, u) ^ p(v ^ w ^ u, u);
        case DiscriminantId::d_published:
            return p(v, u) ^ p(u, w) ^ p(v ^ u, v) ^ p(u, u ^ w);
        case DiscriminantId::d_direct:
            return p(v, u) ^ p(u, w) ^ p(v ^ u, u) ^ p(u, u ^ w);
        case DiscriminantId::e1:
            return p(u, v) ^ p(w, u) ^ p(u ^ v, w) ^ p(v ^ w, u) ^ p(v, w ^ u) ^ p(u, v ^ w);
        case DiscriminantId::e2:
            return p(u, u) ^ p(u, v) ^ p(v, u) ^ p(u, w) ^ p(v ^ u, w) ^ p(u, v ^ w) ^
                   p(u ^ v, u ^ w);
        case DiscriminantId::e3:
            return p(u, u) ^ p(v, u) ^ p(u, w) ^ p(w, u) ^ p(v, u ^ w) ^ p(v ^ w, u) ^
                   p(v ^ u, w ^ u);
        case DiscriminantId::e1_direct:
            return p(u, v) ^ p(u ^ v, w) ^ p(u ^ v ^ w, u) ^ p(w, u) ^ p(v, w ^ u) ^
                   p(u, v ^ w ^ u);
        case DiscriminantId::e2_direct:
            return p(u, v) ^ p(u, w) ^ p(u ^ v, u ^ w) ^ p(v, u) ^ p(v ^ u, w) ^
                   p(u, v ^ u ^ w);
        case DiscriminantId::e3_direct:
            return p(v, u) ^ p(w, u) ^ p(v ^ u, w ^ u) ^ p(u, w) ^ p(v, u ^ w) ^
                   p(v ^ u ^ w, u);
    }
    fail(Errc::index_out_of_range, "unknown discriminant");
}

inline CheckReport discriminant_holds(const FactorSet& phi, DiscriminantId id) {
    CheckReport report{discriminant_name(id)};
    const std::size_t m = phi.size();
    const int arity = discriminant_arity(id);
    if (arity == 3 && phi.dim() > 5)
        fail(Errc::dimension_too_large, "triple scan handles dimension <= 5");
    for (std::size_t u = 0; u < m; ++u) {
        for (std::size_t v = 0; v < m; ++v) {
            if (arity == 2) {
                ++report.scanned;
                if (discriminant_value(phi, id, u, v, 0)) {
                    report.holds = false;
                    report.witness = {u, v};
                    return report;
                }
                continue;
            }
            for (std::size_t w = 0; w < m; ++w) {
                ++report.scanned;
                if (discriminant_value(phi, id, u, v, w)) {
                    report.holds = false;
                    report.witness = {u, v, w};
                    return report;
                }
            }
        }
    }
    return report;
}

// ---- general congruences on verified factor sets ----------------------------
//
// Six congruences every factor set satisfies; items 1-5 scan codeword
// triples, item 6 is weak linearity itself, scanned over pairs:
//   1: phi(u,v)+phi(w,u)+phi(u+v,w)+phi(v,w+u)   = (u.(v+w))/2
//   2: phi(u+v,u+w) = ||u||/4+(u.v)/2+phi(u,w)+phi(v+u,w)+phi(u,v+w)
//   3: phi(u+v,u+w) = ||u||/4+(u.w)/2+phi(v,u)+phi(v,u+w)+phi(v+w,u)
//   4: phi(v,u)+phi(w,u)+phi(u+v,w)+phi(v,w+u)   = (u.v+u.(v+w))/2
//   5: phi(w,u)+phi(v,w)+phi(u,v+w)+phi(v,w+u)   = |u&v&w|+(u.(v+w))/2
//   6: phi(u+v,u)=phi(u,u)+phi(v,u)  and  phi(u,u+v)=phi(u,u)+phi(u,v)
inline CheckReport generalized_congruence(const FactorSet& phi, int item) {
    if (item < 1 || item > 6)
        fail(Errc::index_out_of_range, "congruence item " + std::to_string(item) + " of 1..6");
    if (phi.dim() > 5)
        fail(Errc::dimension_too_large, "congruence scan handles dimension <= 5");
    if (!axiom_violations(phi).clean())
        fail(Errc::not_a_factor_set, "congruences only apply to verified factor sets");

    const LinearCode& code = phi.code();
    CheckReport report{"CONG" + std::to_string(item)};
    const std::size_t m = phi.size();
    auto p = [&phi](std::size_t a, std::size_t b) { return phi.entry(a, b); };
    auto bits = [&code](std::size_t i) { return code.word_bits(i); };

    if (item == 6) {
        for (std::size_t u = 0; u < m; ++u) {
            for (std::size_t v = 0; v < m; ++v) {
                ++report.scanned;
                const bool ok = p(u ^ v, u) == (p(u, u) ^ p(v, u)) &&
                                p(u, u ^ v) == (p(u, u) ^ p(u, v));
                if (!ok) {
                    report.holds = false;
                    report.witness = {u, v};
                    return report;
                }
            }
        }
        return report;
    }

    for (std::size_t u = 0; u < m; ++u) {
        for (std::size_t v = 0; v < m; ++v) {
            for (std::size_t w = 0; w < m; ++w) {
                ++report.scanned;
                int lhs = 0, rhs = 0;
                switch (item) {
                    case 1:
                        lhs = p(u, v) ^ p(w, u) ^ p(u ^ v, w) ^ p(v, w ^ u);
                        rhs = half_mod2(std::popcount(bits(u) & (bits(v) ^ bits(w))));
                        break;
                    case 2:
                        lhs = p(u ^ v, u ^ w);
                        rhs = quarter_mod2(std::popcount(bits(u))) ^
                              half_mod2(std::popcount(bits(u) & bits(v))) ^ p(u, w) ^
                              p(v ^ u, w) ^ p(u, v ^ w);
                        break;
                    case 3:
                        lhs = p(u ^ v, u ^ w);
                        rhs = quarter_mod2(std::popcount(bits(u))) ^
                              half_mod2(std::popcount(bits(u) & bits(w))) ^ p(v, u) ^
                              p(v, u ^ w) ^ p(v ^ w, u);
                        break;
                    case 4:
                        lhs = p(v, u) ^ p(w, u) ^ p(u ^ v, w) ^ p(v, w ^ u);
                        rhs = half_mod2(std::popcount(bits(u) & bits(v))) ^
                              half_mod2(std::popcount(bits(u) & (bits(v) ^ bits(w))));
                        break;
                    case 5:
                        lhs = p(w, u) ^ p(v, w) ^ p(u, v ^ w) ^ p(v, w ^ u);
                        rhs = (std::popcount(bits(u) & bits(v) & bits(w)) & 1) ^
                              half_mod2(std::popcount(bits(u) & (bits(v) ^ bits(w))));
                        break;
                }
                if (lhs != rhs) {
                    report.holds = false;
                    report.witness = {u, v, w};
                    return report;
                }
            }
        }
    }
    return report;
}

} // namespace codeloop
