#ifndef COSPEC_CERTIFY_HPP
#define COSPEC_CERTIFY_HPP

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cospec/charpoly.hpp"
#include "cospec/family.hpp"
#include "cospec/matching.hpp"

namespace cospec {

/// Every claim about one family pair, machine-checked: the order formula,
/// regularity and connectivity of both members, validity of the switching
/// set, exact cospectrality, the W-violator for the unswitched graph and a
/// verified perfect matching for the switched one. `failures` lists the
/// names of any checks that did not hold.
struct CertificateReport {
    int b = 0;
    std::optional<std::uint64_t> seed;
    int order = 0;
    int degree = 0;
    bool order_ok = false;
    bool regular = false;
    bool connected = false;
    bool switching_valid = false;
    bool cospectral_pair = false;
    CharPoly poly;                 // shared by both members when cospectral
    std::string poly_digest;
    bool pm_unswitched = true;     // expected false
    bool pm_switched = false;      // expected true
    TutteViolator violator;        // S = W
    bool violator_ok = false;      // odd(G-W) = b > b-2 = |W|
    Matching witness;              // perfect matching of the switched graph
    bool witness_ok = false;
    int deficiency_unswitched = -1;
    std::vector<std::string> failures;

    bool all_pass() const { return failures.empty(); }
};

CertificateReport certify_family(int b, std::optional<std::uint64_t> seed = std::nullopt);

nlohmann::json to_json(const CertificateReport& report);

/// Short stable digest ("fnv1a64:...") of a coefficient list, for eyeballing
/// reports; equality of the full list is what certifies.
std::string char_poly_digest(const CharPoly& p);

}  // namespace cospec

#endif
