#include "binform/appell.hpp"

#include <cstdlib>
#include <fstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "binform/errors.hpp"
#include "binform/poly_io.hpp"

namespace binform::appell {

namespace {
Polynomial x_poly() { return Polynomial::variable(Variable::x()); }
}

char family_letter(Family f) {
    static constexpr char letters[] = {'B', 'E', 'H', 'T'};
    return letters[static_cast<int>(f)];
}

std::optional<Family> family_from_letter(char c) {
    switch (c) {
        case 'B': return Family::bernoulli;
        case 'E': return Family::euler;
        case 'H': return Family::hermite;
        case 'T': return Family::powers;
        default: return std::nullopt;
    }
}

void FamilyCache::grow_locked(unsigned k) {
    while (polys_.size() <= k) {
        unsigned m = static_cast<unsigned>(polys_.size());
        switch (family_) {
            case Family::powers:
                polys_.push_back(Polynomial::variable(Variable::x(), m));
                break;
            case Family::hermite: {
                if (m == 0) {
                    polys_.push_back(Polynomial(1));
                } else if (m == 1) {
                    polys_.push_back(x_poly());
                } else {
                    polys_.push_back(x_poly() * polys_[m - 1] -
                                     Polynomial(Rational(static_cast<long>(m) - 1)) * polys_[m - 2]);
                }
                break;
            }
            case Family::euler: {
                Polynomial acc = Polynomial::variable(Variable::x(), m);
                Polynomial sum;
                for (unsigned j = 0; j < m; ++j)
                    sum += Polynomial(Rational(binomial_coefficient(m, j))) * polys_[j];
                acc -= sum * Polynomial(make_rational(1, 2));
                polys_.push_back(std::move(acc));
                break;
            }
            case Family::bernoulli: {
                while (bernoulli_numbers_.size() <= m) {
                    unsigned t = static_cast<unsigned>(bernoulli_numbers_.size());
                    if (t == 0) {
                        bernoulli_numbers_.emplace_back(1);
                        continue;
                    }
                    Rational sum(0);
                    for (unsigned j = 0; j < t; ++j)
                        sum += Rational(binomial_coefficient(t + 1, j)) * bernoulli_numbers_[j];
                    bernoulli_numbers_.push_back(-sum / Rational(static_cast<long>(t) + 1));
                }
                Polynomial acc;
                for (unsigned j = 0; j <= m; ++j)
                    acc += Polynomial::term(Rational(binomial_coefficient(m, j)) * bernoulli_numbers_[j],
                                            Monomial::of(Variable::x(), m - j));
                polys_.push_back(std::move(acc));
                break;
            }
        }
    }
}

Polynomial FamilyCache::poly(unsigned k) {
    std::lock_guard<std::mutex> lock(mutex_);
    grow_locked(k);
    return polys_[k];
}

Rational FamilyCache::norm(unsigned k) { return poly(k).constant_value(); }

void FamilyCache::ensure(unsigned k) {
    std::lock_guard<std::mutex> lock(mutex_);
    grow_locked(k);
}

unsigned FamilyCache::size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return static_cast<unsigned>(polys_.size());
}

nlohmann::ordered_json FamilyCache::to_json() const {
    std::lock_guard<std::mutex> lock(mutex_);
    nlohmann::ordered_json polys = nlohmann::ordered_json::array();
    for (const auto& p : polys_) polys.push_back(polynomial_to_json(p));
    return nlohmann::ordered_json{{"family", std::string(1, family_letter(family_))},
                                  {"polynomials", std::move(polys)}};
}

void FamilyCache::load_json(const nlohmann::json& j) {
    try {
        if (!j.is_object() || !j.contains("polynomials")) return;
        if (j.value("family", "") != std::string(1, family_letter(family_))) return;
        std::vector<Polynomial> loaded;
        for (const auto& pj : j["polynomials"]) {
            Polynomial p = polynomial_from_json(pj);
            unsigned k = static_cast<unsigned>(loaded.size());
            if (p.degree_in(Variable::x()) != k) return;  // corrupt cache, recompute
            if (k == 0 && p != Polynomial(1)) return;
            if (k > 0) {
                Polynomial expected = Polynomial(Rational(static_cast<long>(k))) * loaded[k - 1];
                if (diff_x(p) != expected) return;
            }
            loaded.push_back(std::move(p));
        }
        std::lock_guard<std::mutex> lock(mutex_);
        if (loaded.size() > polys_.size()) polys_ = std::move(loaded);
    } catch (const Error&) {
        // malformed payload: keep computing from scratch
    }
}

FamilySet::FamilySet() : FamilySet(cache_dir_from_env()) {}

FamilySet::FamilySet(std::optional<std::filesystem::path> cache_dir) : dir_(std::move(cache_dir)) {
    static constexpr Family all[] = {Family::bernoulli, Family::euler, Family::hermite, Family::powers};
    for (Family f : all) {
        auto& slot = caches_[static_cast<int>(f)];
        slot = std::make_unique<FamilyCache>(f);
        if (dir_) {
            std::ifstream in(*dir_ / (std::string("appell_") + family_letter(f) + ".json"));
            if (in) {
                nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
                if (!j.is_discarded()) slot->load_json(j);
            }
        }
    }
}

void FamilySet::ensure_all(unsigned k) {
    for (auto& c : caches_) c->ensure(k);
}

void FamilySet::save() const {
    if (!dir_) return;
    std::error_code ec;
    std::filesystem::create_directories(*dir_, ec);
    for (const auto& c : caches_) {
        auto path = *dir_ / (std::string("appell_") + family_letter(c->family()) + ".json");
        auto tmp = path;
        tmp += ".tmp";
        {
            std::ofstream out(tmp);
            if (!out) continue;
            out << c->to_json().dump(2) << "\n";
        }
        std::filesystem::rename(tmp, path, ec);
    }
}

std::optional<std::filesystem::path> FamilySet::cache_dir_from_env() {
    const char* dir = std::getenv("BINFORM_CACHE_DIR");
    if (dir == nullptr || *dir == '\0') return std::nullopt;
    return std::filesystem::path(dir);
}

Assignment parse_assignment(const std::vector<std::string>& pairs) {
    Assignment out;
    for (const auto& token : pairs) {
        if (token.size() != 3 || token[1] != '=')
            throw DomainError("assignment token '" + token + "' is not of the form a=B");
        auto s = series_from_letter(token[0]);
        auto f = family_from_letter(token[2]);
        if (!s) throw DomainError("unknown series '" + std::string(1, token[0]) + "'");
        if (!f) throw DomainError("unknown family '" + std::string(1, token[2]) + "'");
        out[*s] = *f;
    }
    return out;
}

nlohmann::ordered_json assignment_json(const Assignment& a) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [s, f] : a)
        j[std::string(1, series_letter(s))] = std::string(1, family_letter(f));
    return j;
}

Polynomial phi(const Polynomial& p, const Assignment& assignment, FamilySet& families) {
    std::map<Variable, Polynomial> bindings;
    for (const auto& v : p.variables()) {
        if (v.kind() == Variable::Kind::appell_x) {
            bindings.emplace(v, x_poly());
        } else if (v.is_coefficient()) {
            auto it = assignment.find(v.series());
            if (it == assignment.end()) throw MissingBindingError(v.name());
            bindings.emplace(v, families.cache(it->second).poly(v.index()));
        } else {
            throw MissingBindingError(v.name());
        }
    }
    return p.substituted(bindings);
}

IdentityReport verify_identity(const catalog::Built& built, const Assignment& assignment,
                               FamilySet& families, std::optional<Rational> expected) {
    IdentityReport r;
    r.construction = built.construction;
    r.order = built.order;
    r.assignment = assignment;
    r.image = phi(built.poly, assignment, families);
    r.constant = diff_x(r.image).is_zero();
    if (r.constant) r.norm = r.image.constant_value();
    r.expected = expected;
    if (expected) r.match = r.constant && r.norm == *expected;
    return r;
}

nlohmann::ordered_json IdentityReport::to_json() const {
    nlohmann::ordered_json j;
    j["construction"] = construction;
    j["n"] = order;
    j["assignment"] = assignment_json(assignment);
    if (!defined) {
        j["status"] = "undefined";
        j["reason"] = undefined_reason;
        return j;
    }
    j["constant"] = constant;
    if (constant)
        j["norm"] = to_string(norm);
    else
        j["image"] = format_polynomial(image);
    if (expected) {
        j["expected"] = to_string(*expected);
        j["match"] = match.value_or(false);
    }
    return j;
}

std::vector<IdentityReport> norm_table(const std::string& construction_id, const Assignment& assignment,
                                       unsigned from, unsigned to, unsigned jobs, FamilySet& families) {
    if (from > to) throw DomainError("empty order range");
    const auto* info = catalog::find_construction(construction_id);
    if (!info) throw DomainError("unknown construction '" + construction_id + "'");
    // Grow the caches once, up front; the scan itself only reads them, so the
    // result cannot depend on the schedule.
    families.ensure_all(to);

    std::vector<IdentityReport> rows(to - from + 1);
    std::exception_ptr failure = nullptr;
#ifdef _OPENMP
    int threads = jobs == 0 ? omp_get_max_threads() : static_cast<int>(jobs);
#else
    int threads = 1;
    (void)jobs;
#endif
#pragma omp parallel for schedule(dynamic) num_threads(threads) if (threads > 1)
    for (long idx = 0; idx < static_cast<long>(rows.size()); ++idx) {
        unsigned n = from + static_cast<unsigned>(idx);
        try {
            catalog::Built built = catalog::build_construction(construction_id, n);
            rows[idx] = verify_identity(built, assignment, families);
        } catch (const RangeError& e) {
            IdentityReport r;
            r.construction = construction_id;
            r.order = n;
            r.assignment = assignment;
            r.defined = false;
            r.undefined_reason = e.what();
            rows[idx] = std::move(r);
        } catch (...) {
#pragma omp critical(binform_scan_failure)
            failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return rows;
}

std::optional<ConjectureId> conjecture_from_name(std::string_view name) {
    if (name == "euler-dv") return ConjectureId::euler_dv;
    if (name == "hermite-discr") return ConjectureId::hermite_discr;
    if (name == "be-dv") return ConjectureId::bernoulli_euler_dv;
    return std::nullopt;
}

std::string conjecture_name(ConjectureId id) {
    switch (id) {
        case ConjectureId::euler_dv: return "euler-dv";
        case ConjectureId::hermite_discr: return "hermite-discr";
        case ConjectureId::bernoulli_euler_dv: return "be-dv";
    }
    return "";
}

std::vector<ConjectureRow> conjecture_scan(ConjectureId id, unsigned from, unsigned to,
                                           FamilySet& families) {
    if (from > to) throw DomainError("empty order range");
    std::vector<ConjectureRow> rows;
    for (unsigned n = from; n <= to; ++n) {
        ConjectureRow row;
        row.n = n;
        switch (id) {
            case ConjectureId::euler_dv: {
                auto built = catalog::dv(n, Series::a, Series::a);
                auto rep = verify_identity(built, {{Series::a, Family::euler}}, families);
                row.lhs = rep.norm;
                row.rhs = Rational(-2) * families.cache(Family::euler).norm(n + 1);
                break;
            }
            case ConjectureId::hermite_discr: {
                if (n < 2) {
                    row.defined = false;
                    rows.push_back(row);
                    continue;
                }
                auto built = catalog::discr(n, Series::a);
                auto rep = verify_identity(built, {{Series::a, Family::hermite}}, families);
                row.lhs = rep.norm;
                Integer prod = 1;
                for (unsigned k = 1; k <= n; ++k) prod *= int_pow(Integer(k), k);
                row.rhs = Rational(prod);
                break;
            }
            case ConjectureId::bernoulli_euler_dv: {
                auto built = catalog::dv(n, Series::a, Series::b);
                auto rep = verify_identity(
                    built, {{Series::a, Family::bernoulli}, {Series::b, Family::euler}}, families);
                row.lhs = rep.norm;
                auto bernoulli = [&](unsigned k) { return families.cache(Family::bernoulli).norm(k); };
                row.rhs = Rational(-2) * Rational(int_pow(Integer(2), 2 * n - 1) - 1) * bernoulli(2 * n);
                row.variant_rhs =
                    Rational(-2) * Rational(int_pow(Integer(2), n - 1) - 1) * bernoulli(n);
                row.variant_match = (row.lhs == *row.variant_rhs);
                break;
            }
        }
        row.match = (row.lhs == row.rhs);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::optional<BinomialId> binomial_from_name(std::string_view name) {
    if (name == "ones") return BinomialId::ones_alternating;
    if (name == "tr") return BinomialId::tr;
    if (name == "ch") return BinomialId::ch;
    if (name == "tr2") return BinomialId::tr2;
    if (name == "trbar2") return BinomialId::trbar2;
    if (name == "trbar2-adjusted") return BinomialId::trbar2_adjusted;
    if (name == "ch4") return BinomialId::ch4;
    return std::nullopt;
}

std::string binomial_name(BinomialId id) {
    switch (id) {
        case BinomialId::ones_alternating: return "ones";
        case BinomialId::tr: return "tr";
        case BinomialId::ch: return "ch";
        case BinomialId::tr2: return "tr2";
        case BinomialId::trbar2: return "trbar2";
        case BinomialId::trbar2_adjusted: return "trbar2-adjusted";
        case BinomialId::ch4: return "ch4";
    }
    return "";
}

namespace {

// Numeric accumulation with the same zero-denominator rule the symbolic
// expansions use: a vanishing falling factorial may only meet a vanishing
// numerator; otherwise the sum is undefined at this order.
struct LazySum {
    Rational total{0};
    bool defined = true;
    std::string reason;

    void add(const Integer& numerator, const Integer& denominator) {
        if (!defined) return;
        if (denominator == 0) {
            if (numerator != 0) {
                defined = false;
                reason = "zero falling factorial against a nonzero term";
            }
            return;
        }
        total += make_rational(numerator, denominator);
    }
};

Integer det2i(const Integer& a, const Integer& b, const Integer& c, const Integer& d) {
    return a * d - b * c;
}

BinomialRow binomial_value(BinomialId id, unsigned n) {
    BinomialRow row;
    row.n = n;
    LazySum sum;
    const long ln = static_cast<long>(n);
    auto sign = [](unsigned i) { return i % 2 == 0 ? Integer(1) : Integer(-1); };
    switch (id) {
        case BinomialId::ones_alternating: {
            for (unsigned i = 0; i <= n; ++i) sum.add(sign(i) * binomial_coefficient(n, i), 1);
            break;
        }
        case BinomialId::tr: {
            for (unsigned i = 0; i <= n; ++i) {
                Integer den = falling_factorial(2 * ln - 4, i);
                for (unsigned j = 0; j <= i; ++j) {
                    Integer det = det2i(falling_factorial(ln, j), falling_factorial(ln - 1, i - j),
                                        falling_factorial(ln - 1, j), falling_factorial(ln - 2, i - j));
                    sum.add(sign(i) * binomial_coefficient(n, i) * binomial_coefficient(i, j) * det, den);
                }
            }
            break;
        }
        case BinomialId::ch: {
            for (unsigned i = 0; i <= n; ++i) {
                Integer den = falling_factorial(2 * ln - 4, i) * falling_factorial(2 * ln - 4, n - i);
                for (unsigned j = 0; j <= i; ++j) {
                    Integer dj = det2i(falling_factorial(ln, j), falling_factorial(ln - 1, i - j),
                                       falling_factorial(ln - 1, j), falling_factorial(ln - 2, i - j));
                    for (unsigned k = 0; k <= n - i; ++k) {
                        Integer dk =
                            det2i(falling_factorial(ln, k), falling_factorial(ln - 1, n - i - k),
                                  falling_factorial(ln - 1, k), falling_factorial(ln - 2, n - i - k));
                        sum.add(sign(i) * binomial_coefficient(n, i) * binomial_coefficient(i, j) *
                                    binomial_coefficient(n - i, k) * dk * dj,
                                den);
                    }
                }
            }
            break;
        }
        case BinomialId::tr2: {
            for (unsigned i = 0; i <= n; ++i) {
                Integer den = falling_factorial(2 * ln - 2, i);
                for (unsigned j = 0; j <= i; ++j) {
                    Integer det = det2i(falling_factorial(ln, j), falling_factorial(ln, i - j),
                                        falling_factorial(ln - 1, j), falling_factorial(ln - 1, i - j));
                    sum.add(sign(i) * binomial_coefficient(n, i) * binomial_coefficient(i, j) * det, den);
                }
            }
            break;
        }
        case BinomialId::trbar2:
        case BinomialId::trbar2_adjusted: {
            const bool adjusted = (id == BinomialId::trbar2_adjusted);
            for (unsigned i = 0; i <= n; ++i) {
                Integer den = falling_factorial(2 * ln - (adjusted ? 4 : 2), i);
                for (unsigned j = 0; j <= i; ++j) {
                    unsigned t = adjusted ? j : i;
                    Integer inner = falling_factorial(ln, t) * falling_factorial(ln - 2, i - j) -
                                    2 * falling_factorial(ln - 1, t) * falling_factorial(ln - 1, i - j) +
                                    falling_factorial(ln - 2, t) * falling_factorial(ln, i - j);
                    sum.add(sign(i) * binomial_coefficient(n, i) * binomial_coefficient(i, j) * inner,
                            den);
                }
            }
            break;
        }
        case BinomialId::ch4: {
            for (unsigned i = 0; i <= n; ++i) {
                Integer den = falling_factorial(3 * ln - 6, i);
                for (unsigned i1 = 0; i1 <= i; ++i1)
                    for (unsigned i2 = 0; i2 + i1 <= i; ++i2) {
                        unsigned i3 = i - i1 - i2;
                        const unsigned s[3] = {i1, i2, i3};
                        // 3x3 determinant of [n-row]_(s[col])
                        Integer d = 0;
                        static constexpr int perms[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                                            {2, 1, 0}, {1, 0, 2}, {0, 2, 1}};
                        for (int p = 0; p < 6; ++p) {
                            Integer prod = falling_factorial(ln - 0, s[perms[p][0]]) *
                                           falling_factorial(ln - 1, s[perms[p][1]]) *
                                           falling_factorial(ln - 2, s[perms[p][2]]);
                            d += (p < 3 ? prod : -prod);
                        }
                        Integer multi = factorial(i) / (factorial(i1) * factorial(i2) * factorial(i3));
                        sum.add(sign(i) * binomial_coefficient(n, i) * multi * d, den);
                    }
            }
            break;
        }
    }
    row.defined = sum.defined;
    row.undefined_reason = sum.reason;
    row.value = sum.total;
    return row;
}

}  // namespace

std::vector<BinomialRow> binomial_scan(BinomialId id, unsigned from, unsigned to) {
    if (from > to) throw DomainError("empty order range");
    std::vector<BinomialRow> rows;
    for (unsigned n = from; n <= to; ++n) rows.push_back(binomial_value(id, n));
    return rows;
}

}  // namespace binform::appell
