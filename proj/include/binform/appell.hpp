#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "binform/catalog.hpp"
#include "binform/polynomial.hpp"

namespace binform::appell {

enum class Family { bernoulli, euler, hermite, powers };

char family_letter(Family f);  // B, E, H, T
std::optional<Family> family_from_letter(char c);

// One Appell family A_0(x), A_1(x), ... generated by exact recurrences:
// Bernoulli from sum C(n+1,k) B_k = 0, Euler from E_n = x^n - (1/2) sum
// C(n,k) E_k, Hermite (probabilists') from He_n = x He_(n-1) - (n-1) He_(n-2),
// powers from x^k.  Growth is monotone and mutex-guarded; identical values
// regardless of schedule.
class FamilyCache {
public:
    explicit FamilyCache(Family f) : family_(f) {}

    Family family() const { return family_; }
    Polynomial poly(unsigned k);  // A_k(x)
    Rational norm(unsigned k);    // A_k(0)
    void ensure(unsigned k);
    unsigned size() const;

    nlohmann::ordered_json to_json() const;
    void load_json(const nlohmann::json& j);  // ignores malformed payloads

private:
    void grow_locked(unsigned k);
    Family family_;
    mutable std::mutex mutex_;
    std::vector<Polynomial> polys_;
    std::vector<Rational> bernoulli_numbers_;  // Bernoulli family only
};

// The four caches together, optionally persisted as JSON under a cache
// directory (one file per family).
class FamilySet {
public:
    FamilySet();
    explicit FamilySet(std::optional<std::filesystem::path> cache_dir);

    FamilyCache& cache(Family f) { return *caches_[static_cast<int>(f)]; }
    void ensure_all(unsigned k);
    void save() const;  // no-op without a cache directory

    static std::optional<std::filesystem::path> cache_dir_from_env();

private:
    std::optional<std::filesystem::path> dir_;
    std::unique_ptr<FamilyCache> caches_[4];
};

using Assignment = std::map<Series, Family>;

Assignment parse_assignment(const std::vector<std::string>& pairs);  // "a=B" tokens
nlohmann::ordered_json assignment_json(const Assignment& a);

// The substitution homomorphism: every coefficient s_i maps to A_i(x) of the
// family assigned to its series; x passes through.
Polynomial phi(const Polynomial& p, const Assignment& assignment, FamilySet& families);

struct IdentityReport {
    std::string construction;
    unsigned order = 0;
    Assignment assignment;
    bool defined = true;
    std::string undefined_reason;
    Polynomial image;
    bool constant = false;  // decided by diff_x(image) == 0, not by sampling
    Rational norm;          // meaningful when constant
    std::optional<Rational> expected;
    std::optional<bool> match;

    nlohmann::ordered_json to_json() const;
};

IdentityReport verify_identity(const catalog::Built& built, const Assignment& assignment,
                               FamilySet& families,
                               std::optional<Rational> expected = std::nullopt);

// One report per order in [from, to]; domain violations become inline
// "undefined" rows.  Output is identical for every job count.
std::vector<IdentityReport> norm_table(const std::string& construction_id, const Assignment& assignment,
                                       unsigned from, unsigned to, unsigned jobs, FamilySet& families);

enum class ConjectureId { euler_dv, hermite_discr, bernoulli_euler_dv };

std::optional<ConjectureId> conjecture_from_name(std::string_view name);
std::string conjecture_name(ConjectureId id);

struct ConjectureRow {
    unsigned n = 0;
    bool defined = true;
    Rational lhs;  // exact norm computed through phi
    Rational rhs;  // the stated right side, evaluated exactly as written
    bool match = false;
    // Labeled alternative right side (bernoulli_euler_dv only): the exponent
    // and index read as n-1 and n instead of 2n-1 and 2n.
    std::optional<Rational> variant_rhs;
    std::optional<bool> variant_match;
};

std::vector<ConjectureRow> conjecture_scan(ConjectureId id, unsigned from, unsigned to,
                                           FamilySet& families);

enum class BinomialId {
    ones_alternating,   // sum (-1)^i C(n,i)
    tr,                 // coefficient sum of the tr expansion at all-ones
    ch,                 // coefficient sum of the ch expansion at all-ones
    tr2,                // coefficient sum of the joint tr expansion
    trbar2,             // the stated trbar2 coefficient sum, exactly as written
    trbar2_adjusted,    // with denominator [2n-4]_i and derivative index j
    ch4,                // coefficient sum of the four-series expansion
};

std::optional<BinomialId> binomial_from_name(std::string_view name);
std::string binomial_name(BinomialId id);

struct BinomialRow {
    unsigned n = 0;
    bool defined = true;
    std::string undefined_reason;
    Rational value;
};

std::vector<BinomialRow> binomial_scan(BinomialId id, unsigned from, unsigned to);

}  // namespace binform::appell
