#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "identities.hpp"

namespace codeloop {

// Hypothesis under which an equivalence between two checks is claimed.
// `always` pairs come from expanding both sides with the multiplication
// rule alone, so they bind any normalized phi. `factor_set` pairs are
// mediated by the Moufang property of genuine code loops and do fail on
// arbitrary tables (e.g. an rwl table whose loop is not LCC exists at
// dimension 3). `weakly_linear` pairs compare published discriminants with
// their direct expansions, which only agree once phi is wl.
enum class Hypothesis { always, weakly_linear, factor_set };

inline const char* hypothesis_name(Hypothesis h) noexcept {
    switch (h) {
        case Hypothesis::always:        return "always";
        case Hypothesis::weakly_linear: return "wl";
        case Hypothesis::factor_set:    return "factor_set";
    }
    return "unknown";
}

struct EquivalencePair {
    std::string lhs, rhs;
    Hypothesis hypothesis = Hypothesis::always;
    bool lhs_holds = false, rhs_holds = false;
    bool applicable = false;  // hypothesis met on this instance
    bool consistent() const { return !applicable || lhs_holds == rhs_holds; }
};

struct Classification {
    std::size_t loop_order = 0;
    bool doubly_even = false;
    bool factor_set = false;  // axioms pass exhaustively
    std::uint64_t axiom_scanned = 0;
    std::uint64_t axiom_violation_total = 0;

    WeakLinearity wl;
    CheckReport latin;
    std::vector<CheckReport> identity_checks;      // full catalog
    std::vector<CheckReport> discriminant_checks;  // full catalog
    std::vector<CheckReport> composite_checks;     // LC, RC, C, CC, ...
    CheckReport nuclear_square;
    std::optional<std::array<std::size_t, 3>> nonassoc;
    std::uint64_t assoc_scanned = 0;

    std::vector<EquivalencePair> matrix;
    bool consistent = false;      // no applicable pair disagrees
    bool theorems_hold = false;   // every verdict predicted for factor sets

    bool holds(const std::string& name) const {
        for (const auto* group : {&identity_checks, &discriminant_checks, &composite_checks})
            for (const CheckReport& r : *group)
                if (r.name == name) return r.holds;
        if (name == "LWL") return wl.lwl.holds;
        if (name == "RWL") return wl.rwl.holds;
        if (name == "WL") return wl.wl();
        if (name == "NUCLEAR_SQUARE") return nuclear_square.holds;
        if (name == "LATIN_SQUARE") return latin.holds;
        fail(Errc::index_out_of_range, "no check named " + name);
    }
};

namespace detail {

inline CheckReport composite(const std::string& name,
                             std::initializer_list<const CheckReport*> parts) {
    CheckReport out{name};
    for (const CheckReport* part : parts) {
        out.scanned += part->scanned;
        if (!part->holds && out.holds) {
            out.holds = false;
            out.witness = part->witness;
        }
    }
    return out;
}

} // namespace detail

// Runs the whole catalog on one table: every identity at loop level, every
// discriminant at table level, weak linearity, nucleus checks, and the
// equivalence matrix between them.
inline Classification classify(const FactorSet& phi) {
    if (phi.dim() > 4)
        fail(Errc::dimension_too_large, "classify handles dimension <= 4");

    Classification result;
    result.doubly_even = is_doubly_even(phi.code()).ok;
    if (result.doubly_even) {
        const ViolationScan scan = axiom_violations(phi);
        result.factor_set = scan.clean();
        result.axiom_scanned = scan.scanned;
        result.axiom_violation_total = scan.total;
    }

    CodeLoop loop = build_loop(phi);
    result.loop_order = loop.order();
    result.latin = check_latin_square(loop);
    result.wl = weak_linearity(phi);

    std::map<std::string, CheckReport> byname;
    for (IdentityId id : identity_catalog) {
        CheckReport r = check_identity(loop, id);
        byname[r.name] = r;
        result.identity_checks.push_back(std::move(r));
    }
    for (DiscriminantId id : discriminant_catalog) {
        CheckReport r = discriminant_holds(phi, id);
        byname[r.name] = r;
        result.discriminant_checks.push_back(std::move(r));
    }

    auto& n = byname;
    const std::vector<CheckReport> composites = {
        detail::composite("LC", {&n["LC1"], &n["LC2"], &n["LC3"]}),
        detail::composite("RC", {&n["RC1"], &n["RC2"], &n["RC3"]}),
        detail::composite("C", {&n["CLOOP"], &n["LC1"], &n["LC2"], &n["LC3"], &n["RC1"],
                                &n["RC2"], &n["RC3"]}),
        detail::composite("CC", {&n["LCC"], &n["RCC"]}),
        detail::composite("MOUFANG",
                          {&n["MOUFANG1"], &n["MOUFANG2"], &n["MOUFANG3"], &n["MOUFANG4"]}),
        detail::composite("EXTRA", {&n["EXTRA1"], &n["EXTRA2"], &n["EXTRA3"]}),
        detail::composite("LEFT_BURN", {&n["LB"], &n["LCC"]}),
        detail::composite("RIGHT_BURN", {&n["RB"], &n["RCC"]}),
    };
    for (const CheckReport& c : composites) {
        byname[c.name] = c;
        result.composite_checks.push_back(c);
    }
    {
        CheckReport burn = detail::composite(
            "BURN", {&n["MOUFANG1"], &n["MOUFANG2"], &n["MOUFANG3"], &n["MOUFANG4"],
                     &n["LCC"], &n["RCC"]});
        byname[burn.name] = burn;
        result.composite_checks.push_back(std::move(burn));
    }

    result.nuclear_square = is_nuclear_square(loop);
    result.nonassoc = find_nonassociative_triple(loop);
    result.assoc_scanned = loop.order() * loop.order() * loop.order();

    // Equivalence matrix. Values are looked up from the verdicts above.
    struct PairSpec {
        const char *lhs, *rhs;
        Hypothesis hyp;
    };
    static const PairSpec pair_specs[] = {
        {"LC1", "A1", Hypothesis::always},
        {"LC2", "A2", Hypothesis::always},
        {"LC3", "A3", Hypothesis::always},
        {"A1", "RWL", Hypothesis::always},
        {"A2", "RWL", Hypothesis::always},
        {"A3", "RWL", Hypothesis::always},
        {"RC1", "B1", Hypothesis::always},
        {"RC2", "B2", Hypothesis::always},
        {"RC3", "B3", Hypothesis::always},
        {"B1", "LWL", Hypothesis::always},
        {"B2", "LWL", Hypothesis::always},
        {"B3", "LWL", Hypothesis::always},
        {"LA", "RWL", Hypothesis::always},
        {"RA", "LWL", Hypothesis::always},
        {"CLOOP", "D_DIRECT", Hypothesis::always},
        {"D_DIRECT", "WL", Hypothesis::always},
        {"C", "WL", Hypothesis::always},
        {"EXTRA1", "E1_DIRECT", Hypothesis::always},
        {"EXTRA2", "E2_DIRECT", Hypothesis::always},
        {"EXTRA3", "E3_DIRECT", Hypothesis::always},
        {"E1", "E1_DIRECT", Hypothesis::weakly_linear},
        {"E2", "E2_DIRECT", Hypothesis::weakly_linear},
        {"E3", "E3_DIRECT", Hypothesis::weakly_linear},
        {"LC", "LCC", Hypothesis::factor_set},
        {"RC", "RCC", Hypothesis::factor_set},
        {"LCC", "RWL", Hypothesis::factor_set},
        {"RCC", "LWL", Hypothesis::factor_set},
        {"LEFT_BURN", "RWL", Hypothesis::factor_set},
        {"RIGHT_BURN", "LWL", Hypothesis::factor_set},
        {"CC", "WL", Hypothesis::factor_set},
        {"BURN", "WL", Hypothesis::factor_set},
        {"EXTRA", "WL", Hypothesis::factor_set},
        {"EXTRA", "NUCLEAR_SQUARE", Hypothesis::factor_set},
        {"C", "CC", Hypothesis::factor_set},
        {"C", "BURN", Hypothesis::factor_set},
        {"C", "EXTRA", Hypothesis::factor_set},
    };

    result.consistent = true;
    for (const PairSpec& spec : pair_specs) {
        EquivalencePair pair;
        pair.lhs = spec.lhs;
        pair.rhs = spec.rhs;
        pair.hypothesis = spec.hyp;
        pair.lhs_holds = result.holds(spec.lhs);
        pair.rhs_holds = result.holds(spec.rhs);
        switch (spec.hyp) {
            case Hypothesis::always:        pair.applicable = true; break;
            case Hypothesis::weakly_linear: pair.applicable = result.wl.wl(); break;
            case Hypothesis::factor_set:    pair.applicable = result.factor_set; break;
        }
        if (!pair.consistent()) result.consistent = false;
        result.matrix.push_back(std::move(pair));
    }

    // On a verified factor set every catalog entry except the published D
    // must hold.
    result.theorems_hold = true;
    if (result.factor_set) {
        for (const auto* group :
             {&result.identity_checks, &result.discriminant_checks, &result.composite_checks})
            for (const CheckReport& r : *group)
                if (r.name != "D" && !r.holds) result.theorems_hold = false;
        if (!result.wl.wl() || !result.nuclear_square.holds || !result.latin.holds)
            result.theorems_hold = false;
    }
    return result;
}

} // namespace codeloop
