#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "classify.hpp"
#include "formats.hpp"

namespace codeloop {

// Exit code contract shared by the CLI commands.
inline constexpr int exit_ok = 0;           // everything predicted held
inline constexpr int exit_inconsistent = 1; // a predicted verdict or equivalence failed
inline constexpr int exit_bad_input = 2;    // parseable but mathematically invalid input
inline constexpr int exit_usage = 3;        // usage, parse or IO failure

struct VerifyResult {
    int exit_code = exit_ok;
    std::string report;
};

namespace detail {

inline void render_doubly_even(std::ostream& out, const DoublyEvenCheck& de) {
    out << "DOUBLY_EVEN " << (de.ok ? "HOLDS" : "FAILS");
    if (de.bad_word)
        out << " witness=" << to_string(*de.bad_word) << " weight=" << weight(*de.bad_word);
    else if (de.bad_pair)
        out << " witness=(" << to_string(de.bad_pair->first) << ","
            << to_string(de.bad_pair->second) << ") dot="
            << dot(de.bad_pair->first, de.bad_pair->second);
    out << " scanned=" << de.scanned << '\n';
}

inline void render_equivalences(std::ostream& out, const std::vector<EquivalencePair>& matrix) {
    out << "equivalences:\n";
    for (const EquivalencePair& pair : matrix) {
        out << "EQUIV " << pair.lhs << '~' << pair.rhs << " hyp=" << hypothesis_name(pair.hypothesis)
            << " lhs=" << pair.lhs_holds << " rhs=" << pair.rhs_holds << " verdict="
            << (!pair.applicable ? "SKIPPED" : (pair.lhs_holds == pair.rhs_holds ? "OK" : "VIOLATED"))
            << '\n';
    }
}

} // namespace detail

// The full verification pipeline on an already parsed code: doubly-even
// gate, axiom solve, catalog classification, congruence suite, report.
inline VerifyResult verify_code(const LinearCode& code) {
    std::ostringstream out;
    out << "code: length=" << code.length() << " dim=" << code.dimension()
        << " codewords=" << code.num_codewords() << '\n';

    const DoublyEvenCheck de = is_doubly_even(code);
    detail::render_doubly_even(out, de);
    if (!de.ok) {
        out << "VERDICT INCONSISTENT\n";
        return {exit_bad_input, out.str()};
    }
    if (code.dimension() > 4) {
        out << "VERDICT INCONSISTENT\n";
        return {exit_bad_input, out.str()};
    }

    FactorSetSpace space = factor_set_space(code);
    const FactorSet& phi = space.particular;
    out << "solver: unknowns=" << space.unknowns << " rank=" << space.rank
        << " nullity=" << space.nullity << '\n';
    {
        const ViolationScan scan = axiom_violations(phi);
        CheckReport r{"FACTOR_SET", scan.clean(), {}, scan.scanned};
        out << render(r) << '\n';
    }

    const Classification cls = classify(phi);
    out << "loop: order=" << cls.loop_order << '\n';
    out << render(cls.latin) << '\n';
    out << "LWL " << (cls.wl.lwl.holds ? "HOLDS" : "FAILS") << " scanned=" << cls.wl.scanned << '\n';
    out << "RWL " << (cls.wl.rwl.holds ? "HOLDS" : "FAILS") << " scanned=" << cls.wl.scanned << '\n';
    out << "WL " << (cls.wl.wl() ? "HOLDS" : "FAILS") << " scanned=" << cls.wl.scanned << '\n';
    for (const CheckReport& r : cls.identity_checks) out << render(r) << '\n';

    bool d_published = true, d_direct = true;
    for (const CheckReport& r : cls.discriminant_checks) {
        out << render(r) << '\n';
        if (r.name == "D") d_published = r.holds;
        if (r.name == "D_DIRECT") d_direct = r.holds;
    }
    if (d_published != d_direct)
        out << "NOTE D: published form disagrees with the direct expansion D_DIRECT;"
               " probable misprint in the published discriminant (phi(v+u,v) vs phi(v+u,u))\n";

    for (const CheckReport& r : cls.composite_checks) out << render(r) << '\n';
    out << render(cls.nuclear_square) << '\n';
    if (cls.nonassoc)
        out << "NONASSOC witness=(" << (*cls.nonassoc)[0] << ',' << (*cls.nonassoc)[1] << ','
            << (*cls.nonassoc)[2] << ") scanned=" << cls.assoc_scanned << '\n';
    else
        out << "ASSOCIATIVE scanned=" << cls.assoc_scanned << '\n';

    bool congruences_hold = true;
    for (int item = 1; item <= 6; ++item) {
        const CheckReport r = generalized_congruence(phi, item);
        congruences_hold = congruences_hold && r.holds;
        out << render(r) << '\n';
    }
    for (DerivedCongruence which :
         {DerivedCongruence::lwl_cong, DerivedCongruence::rwl_cong, DerivedCongruence::wl_sum,
          DerivedCongruence::wl_equiv}) {
        const CheckReport r = derived_congruence_check(phi, which);
        congruences_hold = congruences_hold && r.holds;
        out << render(r) << '\n';
    }

    detail::render_equivalences(out, cls.matrix);
    const bool ok = cls.theorems_hold && cls.consistent && congruences_hold;
    out << "VERDICT " << (ok ? "CONSISTENT" : "INCONSISTENT") << '\n';
    return {ok ? exit_ok : exit_inconsistent, out.str()};
}

inline VerifyResult run_verify(const std::string& matrix_path) {
    return verify_code(load_code(matrix_path));
}

// ---- equivalence fuzzing -----------------------------------------------------

struct FuzzConfig {
    int dim = 2;
    int len = 8;
    int count = 200;
    std::uint64_t seed = 1;
};

struct FuzzResult {
    int exit_code = exit_ok;
    std::string summary;
    std::string dump;  // mismatch details, empty when everything agreed
    int mismatches = 0;
    std::uint64_t pairs_checked = 0;
};

// Draws a random doubly even code and a random normalized table per
// iteration and asserts the expansion-level equivalences between loop
// identities, discriminants and weak linearity.
inline FuzzResult run_fuzz(const FuzzConfig& config) {
    if (config.dim < 1 || config.dim > 3)
        fail(Errc::dimension_too_large, "fuzz handles dimension 1..3");
    if (config.len < 4 || config.len > 64)
        fail(Errc::too_long, "fuzz length outside [4,64]");
    if (config.count < 1)
        fail(Errc::precondition_not_met, "fuzz count must be positive");

    FuzzResult result;
    std::ostringstream dump;
    std::mt19937_64 master(config.seed);

    for (int iter = 0; iter < config.count; ++iter) {
        const std::uint64_t code_seed = master();
        const std::uint64_t phi_seed = master();
        const LinearCode code = random_doubly_even_code(config.len, config.dim, code_seed);
        const FactorSet phi = random_normalized_phi(code, phi_seed);
        const CodeLoop loop = build_loop(phi);
        const WeakLinearity wl = weak_linearity(phi);

        auto ident = [&](IdentityId id) { return check_identity(loop, id).holds; };
        auto disc = [&](DiscriminantId id) { return discriminant_holds(phi, id).holds; };

        struct Observation {
            const char* lhs_name;
            bool lhs;
            const char* rhs_name;
            bool rhs;
        };
        const Observation observations[] = {
            {"LC1", ident(IdentityId::lc1), "A1", disc(DiscriminantId::a1)},
            {"A1", disc(DiscriminantId::a1), "RWL", wl.rwl.holds},
            {"LA", ident(IdentityId::la), "RWL", wl.rwl.holds},
            {"RC1", ident(IdentityId::rc1), "B1", disc(DiscriminantId::b1)},
            {"B1", disc(DiscriminantId::b1), "LWL", wl.lwl.holds},
            {"RA", ident(IdentityId::ra), "LWL", wl.lwl.holds},
            {"CLOOP", ident(IdentityId::c_loop), "D_DIRECT", disc(DiscriminantId::d_direct)},
            {"EXTRA1", ident(IdentityId::extra1), "E1_DIRECT", disc(DiscriminantId::e1_direct)},
            {"EXTRA2", ident(IdentityId::extra2), "E2_DIRECT", disc(DiscriminantId::e2_direct)},
            {"EXTRA3", ident(IdentityId::extra3), "E3_DIRECT", disc(DiscriminantId::e3_direct)},
        };
        for (const Observation& o : observations) {
            ++result.pairs_checked;
            if (o.lhs == o.rhs) continue;
            ++result.mismatches;
            dump << "mismatch iteration=" << iter << " pair=" << o.lhs_name << '~' << o.rhs_name
                 << " lhs=" << o.lhs << " rhs=" << o.rhs << '\n';
            dump << "code:\n";
            for (const BitWord& row : code.basis()) dump << to_string(row) << '\n';
            dump << "phi:\n" << format_phi(phi);
        }
    }

    std::ostringstream summary;
    summary << "fuzz: dim=" << config.dim << " len=" << config.len << " count=" << config.count
            << " seed=" << config.seed << '\n'
            << "pairs=" << result.pairs_checked << " mismatches=" << result.mismatches << '\n';
    result.summary = summary.str();
    result.dump = dump.str();
    result.exit_code = result.mismatches == 0 ? exit_ok : exit_inconsistent;
    return result;
}

// ---- exports -------------------------------------------------------------------

enum class ExportKind { table, phi };

struct ExportResult {
    int exit_code = exit_ok;
    std::string payload;  // file body on success, diagnostic otherwise
};

inline ExportResult export_code(const LinearCode& code, ExportKind kind) {
    const DoublyEvenCheck de = is_doubly_even(code);
    if (!de.ok) {
        std::ostringstream out;
        detail::render_doubly_even(out, de);
        return {exit_bad_input, out.str()};
    }
    if (code.dimension() > 8)
        return {exit_bad_input, "export handles dimension <= 8, got " +
                                    std::to_string(code.dimension()) + "\n"};
    FactorSet phi = solve_factor_set(code);
    if (kind == ExportKind::phi) return {exit_ok, format_phi(phi)};
    CodeLoop loop(std::move(phi));
    loop.materialize();
    return {exit_ok, format_cayley(loop)};
}

inline ExportResult run_export(const std::string& matrix_path, ExportKind kind) {
    return export_code(load_code(matrix_path), kind);
}

} // namespace codeloop
