// Command-line harness over the krlab C API. Subcommands: count, series,
// product, verify, bijection. Exit codes: 0 success, 1 verification
// failure, 2 usage error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "krlab/krlab.h"

namespace {

int emit(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << "\n";
        return 0;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open " << out_path << " for writing\n";
        return 2;
    }
    f << payload;
    return 0;
}

std::string take_string(char* s) {
    if (!s) return {};
    std::string out(s);
    krlab_string_free(s);
    return out;
}

// Comma-separated nondecreasing positive integers; reports the index of the
// first offending token.
int parse_parts(const std::string& literal, std::vector<int>& parts, std::string& error) {
    std::stringstream ss(literal);
    std::string tok;
    int idx = 0;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t pos = 0;
            int v = std::stoi(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
            parts.push_back(v);
        } catch (const std::exception&) {
            error = "bad integer at index " + std::to_string(idx) + ": '" + tok + "'";
            return 2;
        }
        ++idx;
    }
    for (size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) {
            error = "part at index " + std::to_string(i) + " must be >= 1";
            return 2;
        }
        if (i > 0 && parts[i] < parts[i - 1]) {
            error = "parts must be nondecreasing; violation at index " + std::to_string(i);
            return 2;
        }
    }
    return 0;
}

std::string series_csv(const krlab_series* s, int max_q, int max_x) {
    std::ostringstream os;
    os << "n,m,coeff\n";
    for (int n = 0; n <= max_q; ++n)
        for (int m = 0; m <= max_x; ++m) {
            long long c = krlab_series_coeff(s, n, m);
            if (c != 0) os << n << "," << m << "," << c << "\n";
        }
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string(krlab_version()) +
                 " - exact partition enumeration, q-series, and cluster bijections"};
    app.require_subcommand(1);
    app.footer("Environment: KRLAB_THREADS caps suite parallelism.");

    std::string variant = "kr1", format = "csv", out_path, suite = "all", parts_literal;
    int max_n = -1, max_x = -1, product_id = 1;
    bool trace = false;

    auto* count = app.add_subcommand("count", "enumerate a family into an (n, m) count table");
    count
        ->add_option("--variant", variant,
                     "family name: kr1 kr2 kr3 kr4 kr3-1 krb1 krb4-2 krb1-1 kr5 kr6 krc1-2 "
                     "krc2-2 krc2-1 cong1..cong6")
        ->required();
    count->add_option("--max-n", max_n, "largest weight to enumerate")->required();
    count->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    count->add_option("--out", out_path, "write to file instead of stdout");

    auto* series = app.add_subcommand("series", "evaluate a multi-sum series expansion");
    series
        ->add_option("--variant", variant,
                     "series id: a family name or kr5-alt kr6-alt krc1-2-alt krc2-2-alt "
                     "krc2-1-alt krc1-2-laurent krc2-2-laurent krb1-1-alt gg1-lhs gg1-rhs")
        ->required();
    series->add_option("--max-n", max_n, "q truncation order")->required();
    series->add_option("--max-x", max_x, "x truncation order (default: --max-n)");
    series->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    series->add_option("--out", out_path, "write to file instead of stdout");

    auto* product = app.add_subcommand("product", "expand a reciprocal infinite product");
    product->add_option("--id", product_id, "identity number, 1..6")->required();
    product->add_option("--max-n", max_n, "q truncation order")->required();
    product->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    product->add_option("--out", out_path, "write to file instead of stdout");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite, "theorems | conjectures | roundtrip | section5 | all")
        ->check(CLI::IsMember({"theorems", "conjectures", "roundtrip", "section5", "all"}));
    verify->add_option("--max-n", max_n, "override the suite's default order");
    verify->add_option("--out", out_path, "write the JSON report to a file");

    auto* bijection = app.add_subcommand("bijection", "decode a family member into its tuple");
    bijection->add_option("--variant", variant, "family name")->required();
    bijection->add_option("--parts", parts_literal, "comma-separated nondecreasing parts")
        ->required();
    bijection->add_flag("--trace", trace, "include the move-by-move trace");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (count->parsed()) {
        krlab_table* t = krlab_enumerate(variant.c_str(), max_n);
        if (!t) {
            std::cerr << "error: " << krlab_last_error() << "\n";
            return 2;
        }
        std::string payload =
            format == "json" ? take_string(krlab_table_json(t)) : take_string(krlab_table_csv(t));
        krlab_table_free(t);
        return emit(payload, out_path);
    }

    if (series->parsed()) {
        if (max_x < 0) max_x = max_n;
        krlab_series* s = krlab_build_sum_series(variant.c_str(), max_n, max_x);
        if (!s) {
            std::cerr << "error: " << krlab_last_error() << "\n";
            return 2;
        }
        std::string payload =
            format == "json" ? take_string(krlab_series_json(s)) : series_csv(s, max_n, max_x);
        krlab_series_free(s);
        return emit(payload, out_path);
    }

    if (product->parsed()) {
        krlab_series* s = krlab_build_conjecture_product(product_id, max_n);
        if (!s) {
            std::cerr << "error: " << krlab_last_error() << "\n";
            return 2;
        }
        std::string payload =
            format == "json" ? take_string(krlab_series_json(s)) : series_csv(s, max_n, 0);
        krlab_series_free(s);
        return emit(payload, out_path);
    }

    if (verify->parsed()) {
        int status = 0;
        char* report = krlab_verify(suite.c_str(), max_n, 0, &status);
        if (!report) {
            std::cerr << "error: " << krlab_last_error() << "\n";
            return 2;
        }
        int rc = emit(take_string(report), out_path);
        if (rc != 0) return rc;
        return status == KRLAB_OK ? 0 : 1;
    }

    if (bijection->parsed()) {
        std::vector<int> parts;
        std::string error;
        if (parse_parts(parts_literal, parts, error) != 0) {
            std::cerr << "error: " << error << "\n";
            return 2;
        }
        char* result = krlab_bijection_decode(variant.c_str(), parts.data(),
                                              static_cast<int>(parts.size()), 0);
        if (!result) {
            std::cerr << "error: " << krlab_last_error() << "\n";
            return 2;
        }
        std::string payload = take_string(result);
        if (trace) {
            char* lines = krlab_bijection_trace_lines(variant.c_str(), parts.data(),
                                                      static_cast<int>(parts.size()));
            if (!lines) {
                std::cerr << "error: " << krlab_last_error() << "\n";
                return 2;
            }
            payload += "\n" + take_string(lines);
        }
        return emit(payload, out_path);
    }

    return 2;
}
