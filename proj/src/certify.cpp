#include "cospec/certify.hpp"

#include <cstdio>

#include "cospec/serialize.hpp"
#include "cospec/switching.hpp"

namespace cospec {

std::string char_poly_digest(const CharPoly& p) {
    std::uint64_t h = 14695981039346656037ull;
    auto eat = [&](char c) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    };
    for (const auto& c : p.coeffs) {
        for (char ch : c.str()) eat(ch);
        eat(',');
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + buf;
}

CertificateReport certify_family(int b, std::optional<std::uint64_t> seed) {
    const auto pair = build_pair(FamilyParams{b}, seed);
    const Graph& g = pair.layout.graph;
    const Graph& switched = pair.switched;

    CertificateReport report;
    report.b = b;
    report.seed = seed;
    report.degree = b;
    report.order = g.size();

    auto check = [&](bool ok, const char* name) {
        if (!ok) report.failures.emplace_back(name);
        return ok;
    };

    report.order_ok = check(report.order == expected_order(b), "order");
    report.regular = check(is_regular(g, b) && is_regular(switched, b), "regular");
    report.connected = check(is_connected(g) && is_connected(switched), "connected");
    report.switching_valid =
        check(validate_switching_set(g, pair.layout.partition).valid, "switching_valid");

    const auto poly_g = char_poly(g);
    const auto poly_switched = char_poly(switched);
    report.cospectral_pair = check(poly_g == poly_switched, "cospectral");
    report.poly = poly_g;
    report.poly_digest = char_poly_digest(poly_g);

    const auto max_matching = maximum_matching(g);
    report.deficiency_unswitched = g.size() - 2 * static_cast<int>(max_matching.size());
    report.pm_unswitched = max_matching.covers(g.size());
    check(!report.pm_unswitched, "pm_unswitched");

    report.violator = check_tutte_violator(g, pair.layout.w);
    report.violator_ok =
        check(report.violator.violating() && report.violator.odd_components == b &&
                  static_cast<int>(report.violator.s.size()) == b - 2,
              "tutte_violator");

    report.witness = maximum_matching(switched);
    report.pm_switched = report.witness.covers(switched.size());
    report.witness_ok = verify_matching(switched, report.witness);
    check(report.pm_switched && report.witness_ok, "pm_switched");

    return report;
}

nlohmann::json to_json(const CertificateReport& report) {
    nlohmann::json j{{"b", report.b},
                     {"order", report.order},
                     {"degree", report.degree},
                     {"order_ok", report.order_ok},
                     {"regular", report.regular},
                     {"connected", report.connected},
                     {"switching_valid", report.switching_valid},
                     {"cospectral", report.cospectral_pair},
                     {"char_poly_digest", report.poly_digest},
                     {"char_poly", to_json(report.poly)},
                     {"pm_unswitched", report.pm_unswitched},
                     {"pm_switched", report.pm_switched},
                     {"tutte_violator", to_json(report.violator)},
                     {"matching_witness", to_json(report.witness)},
                     {"deficiency_unswitched", report.deficiency_unswitched},
                     {"failures", report.failures},
                     {"all_pass", report.all_pass()}};
    if (report.seed) j["seed"] = *report.seed;
    return j;
}

}  // namespace cospec
