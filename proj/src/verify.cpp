#include "krlab/verify.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <sstream>
#include <thread>

#include "krlab/bijection.hpp"
#include "krlab/genfun.hpp"
#include "krlab/qseries.hpp"

namespace krlab {

namespace {

struct Check {
    std::string name;
    int truncation;
    std::function<std::string()> run;  // empty string = pass, else detail
};

void run_parallel(std::vector<Check>& checks, std::vector<CheckResult>& out, int threads) {
    out.resize(checks.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= checks.size()) return;
            CheckResult r;
            r.name = checks[i].name;
            r.truncation = checks[i].truncation;
            try {
                r.detail = checks[i].run();
                r.passed = r.detail.empty();
            } catch (const std::exception& e) {
                r.passed = false;
                r.detail = std::string("exception: ") + e.what();
            }
            out[i] = std::move(r);
        }
    };
    const int n = std::max(1, std::min<int>(threads, static_cast<int>(checks.size())));
    if (n == 1) {
        worker();
        return;
    }
    std::vector<std::thread> pool;
    for (int i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

const std::vector<std::pair<Variant, std::string>>& theorem_pairs() {
    static const std::vector<std::pair<Variant, std::string>> v = {
        {Variant::KR1, "kr1"},       {Variant::KR2, "kr2"},
        {Variant::KR3, "kr3"},       {Variant::KR4, "kr4"},
        {Variant::KR3_1, "kr3-1"},   {Variant::KRB1, "krb1"},
        {Variant::KRB4_2, "krb4-2"}, {Variant::KRB1_1, "krb1-1"},
        {Variant::KR5, "kr5"},       {Variant::KR6, "kr6"},
        {Variant::KRC1_2, "krc1-2"}, {Variant::KRC2_2, "krc2-2"},
        {Variant::KRC2_1, "krc2-1"},
    };
    return v;
}

std::string check_series_vs_enumeration(Variant var, const std::string& recipe_id, int max_n) {
    TruncatedSeries s = build_sum_series(recipe_id, max_n, max_n);
    CountTable t = enumerate(var, max_n);
    for (int n = 0; n <= max_n; ++n)
        for (int m = 0; m <= max_n; ++m) {
            const long long want = t.at(n, m);
            const long long got = s.coeff(n, m);
            if (want != got) {
                std::ostringstream os;
                os << "coefficient (n=" << n << ", m=" << m << "): series " << got
                   << ", enumeration " << want;
                return os.str();
            }
        }
    return "";
}

std::string check_conjecture(int id, int max_q) {
    static const char* sums[] = {"kr1", "kr2", "kr3", "kr4", "kr5", "kr6"};
    TruncatedSeries product = build_conjecture_product(id, max_q);
    TruncatedSeries sum = build_sum_series(sums[id - 1], max_q, max_q).at_x1();
    EqualityVerdict v = series_equal(product, sum, max_q);
    return v.equal ? "" : v.str();
}

const std::vector<Variant>& roundtrip_variants() {
    static const std::vector<Variant> v = {
        Variant::KR1,  Variant::KR2,  Variant::KR3,    Variant::KR4,    Variant::KR5,
        Variant::KR6,  Variant::KR3_1, Variant::KRB1_1, Variant::KRC1_2, Variant::KRC2_2,
    };
    return v;
}

std::string check_roundtrip(Variant var, int max_n) {
    // decode then encode over every family member
    for (int n = 0; n <= max_n; ++n) {
        for (const Partition& p : members(var, n)) {
            MoveTuple t = decode(var, p);
            if (t.total_weight() != p.weight())
                return "weight ledger broken decoding " + p.str();
            Partition back = encode(t);
            if (back != p)
                return "encode(decode(.)) != id at " + p.str() + " -> " + back.str();
        }
    }
    // encode then decode over the whole tuple space
    std::string fail;
    all_tuples(var, max_n, [&](const MoveTuple& t) {
        if (!fail.empty()) return;
        Partition p = encode(t);
        if (p.weight() != t.total_weight()) {
            fail = "weight ledger broken encoding " + t.str();
            return;
        }
        MoveTuple back = decode(var, p);
        if (!(back == t)) fail = "decode(encode(.)) != id at " + t.str();
    });
    return fail;
}

std::string check_bivariate_equal(const std::string& a, const std::string& b, int max_q) {
    TruncatedSeries sa = build_sum_series(a, max_q, max_q);
    TruncatedSeries sb = build_sum_series(b, max_q, max_q);
    EqualityVerdict v = series_equal(sa, sb, max_q);
    return v.equal ? "" : (a + " vs " + b + ": " + v.str());
}

}  // namespace

int default_thread_count() {
    if (const char* env = std::getenv("KRLAB_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

VerificationReport run_suite(const std::string& suite, int max_n, int threads) {
    const auto t0 = std::chrono::steady_clock::now();
    if (threads <= 0) threads = default_thread_count();

    std::vector<Check> checks;
    bool known = false;

    if (suite == "theorems" || suite == "all") {
        known = true;
        const int n = max_n > 0 ? max_n : 35;
        for (const auto& [var, id] : theorem_pairs())
            checks.push_back(Check{"theorem:" + id, n,
                                   [var = var, id = id, n]() {
                                       return check_series_vs_enumeration(var, id, n);
                                   }});
    }
    if (suite == "conjectures" || suite == "all") {
        known = true;
        const int n = max_n > 0 ? max_n : 60;
        for (int id = 1; id <= 6; ++id)
            checks.push_back(Check{"conjecture:" + std::to_string(id), n,
                                   [id, n]() { return check_conjecture(id, n); }});
    }
    if (suite == "roundtrip" || suite == "all") {
        known = true;
        const int n = max_n > 0 ? max_n : 24;
        for (Variant var : roundtrip_variants())
            checks.push_back(Check{std::string("roundtrip:") + variant_info(var).name, n,
                                   [var, n]() { return check_roundtrip(var, n); }});
    }
    if (suite == "section5" || suite == "all") {
        known = true;
        const int n = max_n > 0 ? max_n : 30;
        const std::pair<const char*, const char*> alts[] = {
            {"kr5", "kr5-alt"},       {"kr6", "kr6-alt"},
            {"krc1-2", "krc1-2-alt"}, {"krc2-2", "krc2-2-alt"},
            {"krc2-1", "krc2-1-alt"},
        };
        for (const auto& [lhs, rhs] : alts)
            checks.push_back(Check{std::string("section5:") + lhs + "=" + rhs, n,
                                   [lhs = lhs, rhs = rhs, n]() {
                                       return check_bivariate_equal(lhs, rhs, n);
                                   }});
        checks.push_back(Check{"section5:krc1-2=laurent", n, [n]() {
                                   return check_bivariate_equal("krc1-2", "krc1-2-laurent", n);
                               }});
        checks.push_back(Check{"section5:krc2-2=laurent", n, [n]() {
                                   return check_bivariate_equal("krc2-2", "krc2-2-laurent", n);
                               }});
        checks.push_back(Check{"section5:gg1", n, [n]() {
                                   return check_bivariate_equal("gg1-lhs", "gg1-rhs", n);
                               }});
        checks.push_back(Check{"section5:krb1-1=alt", n, [n]() {
                                   return check_bivariate_equal("krb1-1", "krb1-1-alt", n);
                               }});
    }
    if (!known) throw ArgumentError("unknown suite: " + suite +
                                    " (expected theorems|conjectures|roundtrip|section5|all)");

    VerificationReport report;
    report.suite = suite;
    report.max_n = max_n;
    run_parallel(checks, report.checks, threads);
    report.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return report;
}

std::string VerificationReport::to_json() const {
    std::ostringstream os;
    os << "{\"suite\":\"" << suite << "\",\"max_n\":" << max_n << ",\"passed\":"
       << (passed() ? "true" : "false") << ",\"checks\":[";
    for (size_t i = 0; i < checks.size(); ++i) {
        const CheckResult& c = checks[i];
        os << (i ? "," : "") << "{\"name\":\"" << c.name << "\",\"status\":\""
           << (c.passed ? "pass" : "fail") << "\",\"truncation\":" << c.truncation
           << ",\"first_counterexample\":";
        if (c.detail.empty()) os << "null";
        else {
            os << "\"";
            for (char ch : c.detail) {
                if (ch == '"' || ch == '\\') os << '\\';
                os << ch;
            }
            os << "\"";
        }
        os << "}";
    }
    os << "],\"wall_ms\":" << wall_ms << "}";
    return os.str();
}

}  // namespace krlab
