#include "krlab/krlab.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "krlab/bijection.hpp"
#include "krlab/genfun.hpp"
#include "krlab/partitions.hpp"
#include "krlab/qseries.hpp"
#include "krlab/verify.hpp"

using namespace krlab;

struct krlab_table {
    CountTable table;
};
struct krlab_series {
    TruncatedSeries series;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <typename Fn>
auto guarded(Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const std::exception& e) {
        set_error(e.what());
        return nullptr;
    }
}

std::string json_int_array(const std::vector<int>& v) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "]";
    return os.str();
}

}  // namespace

extern "C" {

const char* krlab_version(void) { return "krlab 1.0.0"; }

const char* krlab_last_error(void) { return g_last_error.c_str(); }

void krlab_string_free(char* s) { std::free(s); }

int krlab_variant_known(const char* name) {
    return name && variant_from_name(name).has_value() ? 1 : 0;
}

krlab_table* krlab_enumerate(const char* variant, int max_n) {
    return guarded([&]() -> krlab_table* {
        if (!variant) throw ArgumentError("variant name is null");
        auto v = variant_from_name(variant);
        if (!v) throw ConfigError("unknown variant: " + std::string(variant));
        return new krlab_table{enumerate(*v, max_n)};
    });
}

krlab_table* krlab_enumerate_congruence(int modulus, const int* residues, int n_residues,
                                        int max_n) {
    return guarded([&]() -> krlab_table* {
        std::vector<int> rs;
        for (int i = 0; i < n_residues; ++i) rs.push_back(residues[i]);
        return new krlab_table{enumerate_congruence(modulus, rs, max_n)};
    });
}

void krlab_table_free(krlab_table* t) { delete t; }

long long krlab_table_count(const krlab_table* t, int n, int m) {
    return t ? t->table.at(n, m) : 0;
}

long long krlab_table_total(const krlab_table* t, int n) {
    return t ? t->table.total(n) : 0;
}

char* krlab_table_csv(const krlab_table* t) {
    if (!t) {
        set_error("null table");
        return nullptr;
    }
    return dup_string(t->table.to_csv());
}

char* krlab_table_json(const krlab_table* t) {
    if (!t) {
        set_error("null table");
        return nullptr;
    }
    return dup_string(t->table.to_json());
}

krlab_series* krlab_build_sum_series(const char* recipe_id, int max_q, int max_x) {
    return guarded([&]() -> krlab_series* {
        if (!recipe_id) throw ArgumentError("recipe id is null");
        return new krlab_series{build_sum_series(recipe_id, max_q, max_x)};
    });
}

krlab_series* krlab_build_conjecture_product(int id, int max_q) {
    return guarded([&]() -> krlab_series* {
        return new krlab_series{build_conjecture_product(id, max_q)};
    });
}

void krlab_series_free(krlab_series* s) { delete s; }

long long krlab_series_coeff(const krlab_series* s, int n, int m) {
    if (!s) return 0;
    try {
        return s->series.coeff(n, m);
    } catch (const std::exception& e) {
        set_error(e.what());
        return 0;
    }
}

char* krlab_series_json(const krlab_series* s) {
    if (!s) {
        set_error("null series");
        return nullptr;
    }
    return dup_string(s->series.to_json());
}

int krlab_series_equal(const krlab_series* a, const krlab_series* b, int up_to_q,
                       char** detail) {
    if (!a || !b) {
        set_error("null series");
        return -1;
    }
    try {
        EqualityVerdict v = series_equal(a->series, b->series, up_to_q);
        if (detail) *detail = dup_string(v.str());
        return v.equal ? 1 : 0;
    } catch (const std::exception& e) {
        set_error(e.what());
        return -1;
    }
}

char* krlab_bijection_decode(const char* variant, const int* parts, int n_parts,
                             int with_trace) {
    return guarded([&]() -> char* {
        if (!variant) throw ArgumentError("variant name is null");
        auto v = variant_from_name(variant);
        if (!v) throw ConfigError("unknown variant: " + std::string(variant));
        std::vector<int> ps;
        for (int i = 0; i < n_parts; ++i) ps.push_back(parts[i]);
        Partition p(ps);
        MoveTrace trace;
        MoveTuple t = decode(*v, p, with_trace ? &trace : nullptr);
        Partition back = encode(t);
        std::ostringstream os;
        os << "{\"variant\":\"" << variant << "\""
           << ",\"counts\":[" << t.spec.n1 << "," << t.spec.n2 << "," << t.spec.n3 << "]"
           << ",\"beta\":" << json_int_array(t.beta.parts())
           << ",\"beta_weight\":" << t.beta.weight() << ",\"mu\":" << json_int_array(t.mu)
           << ",\"eta\":" << json_int_array(t.eta) << ",\"nu\":" << json_int_array(t.nu)
           << ",\"extra_move\":" << (t.extra_move ? "true" : "false")
           << ",\"weight\":" << t.total_weight()
           << ",\"reencoded_ok\":" << (back == p ? "true" : "false");
        if (with_trace) {
            os << ",\"trace\":[";
            bool first = true;
            for (const TraceStep& s : trace) {
                os << (first ? "" : ",") << "{\"op\":\"" << s.op << "\",\"rank\":" << s.rank
                   << ",\"anchor\":" << s.anchor << ",\"weight_delta\":" << s.weight_delta;
                if (!s.parts.empty()) os << ",\"parts\":" << json_int_array(s.parts);
                os << "}";
                first = false;
            }
            os << "]";
        }
        os << "}";
        return dup_string(os.str());
    });
}

char* krlab_bijection_trace_lines(const char* variant, const int* parts, int n_parts) {
    return guarded([&]() -> char* {
        if (!variant) throw ArgumentError("variant name is null");
        auto v = variant_from_name(variant);
        if (!v) throw ConfigError("unknown variant: " + std::string(variant));
        std::vector<int> ps;
        for (int i = 0; i < n_parts; ++i) ps.push_back(parts[i]);
        MoveTrace trace;
        decode(*v, Partition(ps), &trace);
        return dup_string(trace_to_json_lines(trace));
    });
}

char* krlab_verify(const char* suite, int max_n, int threads, int* status) {
    if (status) *status = KRLAB_EINVAL;
    return guarded([&]() -> char* {
        if (!suite) throw ArgumentError("suite name is null");
        VerificationReport report = run_suite(suite, max_n, threads);
        if (status) *status = report.passed() ? KRLAB_OK : KRLAB_EVERIFY;
        return dup_string(report.to_json());
    });
}

}  // extern "C"
