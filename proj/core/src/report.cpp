#include "jetcm/report.hpp"

#include "jetcm/error.hpp"
#include "jetcm/format.hpp"

#include <random>
#include <set>

namespace jetcm {

const char* verdict_name(Verdict v) {
    switch (v) {
    case Verdict::Verified: return "VERIFIED";
    case Verdict::Falsified: return "FALSIFIED";
    case Verdict::Err: return "ERROR";
    }
    return "ERROR";
}

void add_spot_checks(Report& report, const JetContext& ctx, std::uint64_t seed, int count) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(1, 9);
    std::uniform_int_distribution<int> den(1, 9);

    for (const auto& res : report.residuals) {
        std::set<Atom> atoms;
        res.residual.for_each_atom([&](const Atom& a) { atoms.insert(a); });
        for (int c = 0; c < count; ++c) {
            std::map<Atom, Rational> point;
            for (const Atom& a : atoms)
                point.emplace(a, Rational(num(rng), den(rng)));
            Report::SpotCheck sc;
            for (const auto& [a, v] : point)
                sc.assignment.emplace(format_atom(a, ctx), v.str());
            try {
                sc.value = numeric_str(eval_numeric(res.residual, point));
            } catch (const Error&) {
                sc.value = "undefined"; // point hit a pole or domain edge
            }
            report.spot_checks.push_back(std::move(sc));
        }
    }
}

} // namespace jetcm
