#ifndef BICONE_SUITES_HPP
#define BICONE_SUITES_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bicone/dimension.hpp"
#include "bicone/invariants.hpp"
#include "bicone/jets.hpp"
#include "bicone/report.hpp"
#include "bicone/rng.hpp"
#include "bicone/varieties.hpp"

namespace bicone::suites {

struct Options {
    uint64_t seed = 12022;
    dimension::FieldChoice field{};   // Q unless overridden
    dimension::Budget budget{};
    std::vector<int> algebras{2, 3, 4};
};

const std::vector<std::string>& suite_names(); // identities .. all

std::vector<Report> run_suite(const std::string& suite, const Options& opt);

// Shared fixture/session cache so polarized families are built once.
class Session {
public:
    explicit Session(Options opt) : opt_(std::move(opt)) {}
    const Options& options() const { return opt_; }
    const invariants::PolarizedFamily& family(int n);
    const varieties::VarietySpec& variety(int n, varieties::Kind kind);

    // seeded samples
    varieties::PairPoint random_pair(int n, Rng& rng);
    varieties::PairPoint random_upper_pair(int n, Rng& rng);
    // members of the nilpotent bicone: pairs in u x u plus the named witnesses
    std::vector<varieties::PairPoint> nilpotent_bicone_members(int n, Rng& rng,
                                                               size_t count);
    varieties::PairPoint rsc4_pair(); // the explicit sl3 fixture

private:
    Options opt_;
    std::map<int, invariants::PolarizedFamily> families_;
    std::map<std::pair<int, int>, varieties::VarietySpec> specs_;
};

std::vector<Report> suite_identities(Session& s);
std::vector<Report> suite_omega(Session& s);
std::vector<Report> suite_bicones(Session& s);
std::vector<Report> suite_dimensions(Session& s);
std::vector<Report> suite_jets(Session& s);
std::vector<Report> suite_components(Session& s);
std::vector<Report> suite_nullcone(Session& s);

} // namespace bicone::suites

#endif
