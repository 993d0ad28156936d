#include "skein/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "skein/psi.hpp"
#include "skein/repn.hpp"
#include "skein/symfun.hpp"
#include "skein/trace.hpp"

namespace skein {

namespace {

using Check = std::function<void(int n, int degree, VerifyReport&)>;

std::string label(const std::string& what, int a) { return what + " " + std::to_string(a); }
std::string label(const std::string& what, int a, int b) {
    return what + " " + std::to_string(a) + "," + std::to_string(b);
}

std::vector<int> descending_word(int m) {
    std::vector<int> w;
    for (int g = m - 1; g >= 1; --g) w.push_back(g);
    return w;
}

void murphy_linear(int n, int, VerifyReport& r) {
    const Scalar z = sym::z();
    for (int k = 2; k <= n; ++k)
        for (int j = 2; j <= k; ++j)
            r.add(label("T(j) = 1 + z M(j), j,n =", j, k),
                  murphy_T(j, k) == HeckeElt::identity(k) + murphy_M(j, k) * z);
}

void murphy_commute(int n, int degree, VerifyReport& r) {
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            HeckeElt a = murphy_T(i, n), b = murphy_T(j, n);
            r.add(label("T(i) T(j) = T(j) T(i), i,j =", i, j), a * b == b * a);
        }
    for (int m = 1; m <= degree; ++m)
        r.add(label("sum_j T(j)^m central, m =", m), is_central(power_sum_T(m, n)));
}

void murphy_sum_central(int n, int, VerifyReport& r) {
    const Scalar zv = sym::z() * sym::v().inv();
    for (int k = 1; k <= n; ++k) {
        HeckeElt t = t_circle(k);
        r.add(label("T^(n) = T^(n-1) + z v^-1 T(n), n =", k),
              t == include(t_circle(k - 1), k) + murphy_T(k, k) * zv);
        r.add(label("T^(n) central, n =", k), is_central(t));
    }
}

void phi_distinct(int n, int, VerifyReport& r) {
    std::vector<Scalar> values;
    auto listed = nlohmann::json::array();
    for (const Partition& lambda : partitions(n)) {
        values.push_back(t_lambda(lambda));
        listed.push_back({{"lambda", to_json(lambda)}, {"t", to_json(values.back())}});
    }
    bool distinct = true;
    for (std::size_t a = 0; a < values.size(); ++a)
        for (std::size_t b = a + 1; b < values.size(); ++b)
            if (values[a] == values[b]) distinct = false;
    r.add(label("t_lambda pairwise distinct, count =", static_cast<int>(values.size())), distinct,
          std::move(listed));
    for (const Partition& lambda : partitions(n)) {
        SymFunc sl = schur(lambda);
        r.add("phi(s_" + to_string(lambda) + ") = t_lambda s_" + to_string(lambda),
              phi_apply(sl, n) == sl * t_lambda(lambda));
    }
}

void row_idem(int n, int, VerifyReport& r) {
    const Scalar s = sym::s();
    for (int k = 1; k <= n; ++k) {
        const HeckeElt a = a_sym(k);
        const HeckeElt hk = h_idem(k);
        if (k >= 2) {
            r.add(label("a_n = a_{n-1} gamma_n, n =", k), a == include(a_sym(k - 1), k) * gamma(k));
            r.add(label("s^{n-1}[n] h_n = h_{n-1} gamma_n, n =", k),
                  hk * (s.pow(k - 1) * quantum_int(k)) == include(h_idem(k - 1), k) * gamma(k));
        }
        r.add(label("a_n^2 = phi_s(a_n) a_n, n =", k), a * a == a * phi_s(a));
        r.add(label("h_n^2 = h_n, n =", k), hk * hk == hk);
        r.add(label("mirror(h_n) = h_n, n =", k), mirror(hk) == hk);
        const HeckeElt ek = e_idem(k);
        r.add(label("e_n^2 = e_n, n =", k), ek * ek == ek);
    }
}

void eh_inverse(int, int degree, VerifyReport& r) {
    const auto product = scale_t(elementary_series(degree), Scalar(-1)) * complete_series(degree);
    const auto one = TruncSeries<SymFunc>::constant(SymFunc::constant(1), degree);
    for (int k = 0; k <= degree; ++k)
        r.add(label("[t^k] E(-t) H(t) = [k = 0], k =", k), product[k] == one[k]);
}

void ah(int, int degree, VerifyReport& r) {
    for (int m = 1; m <= degree; ++m) {
        const auto word = descending_word(m);
        r.add(label("A_m = closure(sigma_{m-1}...sigma_1), m =", m),
              closed_braid_A(m) == closure(word_elt(m, word)));
    }
}

void ah_mirror_inverse(int, int degree, VerifyReport& r) {
    const Scalar z = sym::z();
    std::vector<SymFunc> a{SymFunc::constant(1)}, abar{SymFunc::constant(1)};
    for (int m = 1; m <= degree; ++m) {
        auto word = descending_word(m);
        for (int& g : word) g = -g;
        SymFunc neg = closure(word_elt(m, word));
        r.add(label("closure of the negative braid = mirror(A_m), m =", m),
              neg == mirror(closed_braid_A(m)));
        a.push_back(closed_braid_A(m) * z);
        abar.push_back(neg * mirror(z));
    }
    const auto product = TruncSeries<SymFunc>(a) * TruncSeries<SymFunc>(abar);
    for (int k = 0; k <= degree; ++k)
        r.add(label("[t^k] A(t) Abar(t) = [k = 0], k =", k),
              product[k] == (k == 0 ? SymFunc::constant(1) : SymFunc{}));
}

void mirror_h(int n, int degree, VerifyReport& r) {
    for (int k = 1; k <= n; ++k) r.add(label("mirror(h_idem(n)) = h_idem(n), n =", k), mirror(h_idem(k)) == h_idem(k));
    for (int k = 1; k <= std::min(n, degree); ++k)
        r.add(label("closure(h_idem(n)) = h_n, n =", k), closure(h_idem(k)) == h(k));
}

void closure_consistency(int n, int, VerifyReport& r) {
    std::mt19937_64 rng(20240601);
    for (int k = 1; k <= n; ++k)
        for (int trial = 0; trial < 5; ++trial) {
            HeckeElt x = random_element(k, rng), y = random_element(k, rng);
            const std::string tag = label("n,trial =", k, trial);
            r.add("markov_ev = ev_sym o closure, " + tag, markov_ev(x) == ev_sym(closure(x)));
            r.add("markov_ev(xy) = markov_ev(yx), " + tag, markov_ev(x * y) == markov_ev(y * x));
            r.add("closure(xy) = closure(yx), " + tag, closure(x * y) == closure(y * x));
        }
}

void power(int n, int degree, VerifyReport& r) {
    const Scalar s = sym::s(), vinv = sym::v().inv();
    for (int m = 1; m <= degree; ++m) {
        const PowerSumPoly pm = PowerSumPoly::generator(m);
        for (int k = 1; k <= n; ++k) {
            HeckeElt diff = psi(k, pm) - include(psi(k - 1, pm), k);
            r.add(label("psi_n(P_m) - psi_{n-1}(P_m) = (s^m - s^-m) v^-m T(n)^m, m,n =", m, k),
                  diff == pow(murphy_T(k, k), m) * ((s.pow(m) - s.pow(-m)) * vinv.pow(m)));
        }
    }
    for (int k = 1; k <= n; ++k) r.add(label("psi_n(h_1) = T^(n), n =", k), psi(k, h(1)) == t_circle(k));
}

void murphy_series_check(int n, int degree, VerifyReport& r) {
    for (int k = 1; k <= n; ++k) {
        auto rep = verify_murphy_series(k, degree);
        for (const auto& d : rep.degrees) r.add(label("psi_n(H(t)) = rhs, n,degree =", k, d.degree), d.equal);
    }
}

const std::map<std::string, Check>& checks() {
    static const std::map<std::string, Check> table = {
        {"murphy-linear", murphy_linear},
        {"murphy-commute", murphy_commute},
        {"murphy-sum-central", murphy_sum_central},
        {"phi-distinct", phi_distinct},
        {"row-idem", row_idem},
        {"eh-inverse", eh_inverse},
        {"ah", ah},
        {"ah-mirror-inverse", ah_mirror_inverse},
        {"mirror-h", mirror_h},
        {"closure-consistency", closure_consistency},
        {"power", power},
        {"murphy-series", murphy_series_check},
    };
    return table;
}

}  // namespace

const std::vector<std::string>& verify_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> out{"murphy-linear", "murphy-commute", "murphy-sum-central",
                                     "phi-distinct",  "row-idem",       "eh-inverse",
                                     "ah",            "ah-mirror-inverse", "mirror-h",
                                     "closure-consistency", "power",    "murphy-series"};
        out.push_back("all");
        return out;
    }();
    return ids;
}

VerifyReport run_verify(const std::string& id, int n, int degree) {
    if (n < 1 || n > kVerifyMaxN)
        throw std::invalid_argument("--n must be in 1.." + std::to_string(kVerifyMaxN));
    if (degree < 1 || degree > kVerifyMaxDegree)
        throw std::invalid_argument("--degree must be in 1.." + std::to_string(kVerifyMaxDegree));
    VerifyReport report;
    report.theorem = id;
    report.params = {{"n", n}, {"degree", degree}};
    const auto start = std::chrono::steady_clock::now();
    if (id == "all") {
        for (const auto& [name, check] : checks()) {
            VerifyReport sub = run_verify(name, n, degree);
            report.add(name, sub.passed, sub.to_json());
        }
    } else {
        auto it = checks().find(id);
        if (it == checks().end()) throw std::invalid_argument("unknown theorem id '" + id + "'");
        it->second(n, degree, report);
    }
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    return report;
}

nlohmann::json VerifyReport::to_json() const {
    auto cases = nlohmann::json::array();
    for (const auto& c : details) {
        nlohmann::json j = {{"case", c.name}, {"status", c.passed ? "pass" : "fail"}};
        if (!c.info.is_null()) j["info"] = c.info;
        cases.push_back(std::move(j));
    }
    return {{"theorem", theorem},
            {"params", params},
            {"status", passed ? "pass" : "fail"},
            {"details", std::move(cases)},
            {"elapsed_ms", elapsed_ms}};
}

std::string VerifyReport::to_text() const {
    std::ostringstream os;
    os << theorem << " " << params.dump() << ": " << (passed ? "PASS" : "FAIL") << " (" << elapsed_ms
       << " ms)\n";
    for (const auto& c : details) os << "  [" << (c.passed ? "pass" : "FAIL") << "] " << c.name << "\n";
    return os.str();
}

HeckeElt random_element(int n, std::mt19937_64& rng, int max_terms) {
    const auto& g = SymmetricGroup::get(n);
    std::uniform_int_distribution<std::uint32_t> pick(0, g.order() - 1);
    std::uniform_int_distribution<int> count(1, max_terms), exponent(-2, 2), coeff(-3, 3);
    HeckeElt x(n);
    const int terms = count(rng);
    for (int t = 0; t < terms; ++t) {
        Laurent c;
        for (int k = 0; k < 2; ++k) c = c + Laurent::monomial(exponent(rng), exponent(rng), coeff(rng));
        x += HeckeElt::basis(g.perm(pick(rng)), c);
    }
    return x;
}

}  // namespace skein
