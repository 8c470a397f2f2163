/*
   Copyright 2026 The thueff authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "thueff/json_out.hpp"
#include "thueff/parse.hpp"

namespace {

using namespace thueff;

constexpr const char* kVar = "T";

// Exit codes: 0 success, 1 domain error (bad input), 2 internal assertion.
constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitInternal = 2;

void emit(const OrderedJson& doc) { std::cout << render_json(doc); }

std::pair<long, long> parse_n_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        throw DomainError("InvalidArgument", "--n-range must look like MIN..MAX, e.g. -3..3");
    }
    auto parse_long = [&text](const std::string& s, std::size_t base_offset) {
        try {
            std::size_t used = 0;
            long v = std::stol(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            throw ParseError(base_offset, "expected an integer in --n-range");
        }
    };
    long lo = parse_long(text.substr(0, dots), 0);
    long hi = parse_long(text.substr(dots + 2), dots + 2);
    if (lo > hi) throw DomainError("InvalidArgument", "--n-range bounds are reversed");
    return {lo, hi};
}

int run(int argc, char** argv) {
    CLI::App app{"Exact solver for the quartic equation X(X-Y)(X+Y)(X-lambda*Y) + Y^4 = xi "
                 "over polynomials with Gaussian-rational coefficients"};
    app.require_subcommand(1);

    std::string lambda_text;
    std::string xi_text;
    std::string x_text;
    std::string y_text;
    std::string n_range_text;
    std::string coeff_set_text;
    std::string a_text;
    std::string b_text;
    std::string output = "json";
    int classify_n = 0;
    int max_deg = 0;
    long long budget = 100000000;

    CLI::App* solve = app.add_subcommand("solve", "Complete solution set for F(x, y) = xi");
    solve->add_option("--lambda", lambda_text, "Nonconstant polynomial in " + std::string(kVar))
        ->required();
    solve->add_option("--xi", xi_text, "Nonzero Gaussian-rational constant")->required();

    CLI::App* check = app.add_subcommand("check", "Classify one candidate pair (x, y)");
    check->add_option("--lambda", lambda_text)->required();
    check->add_option("--xi", xi_text)->required();
    check->add_option("--x", x_text, "Candidate x as a polynomial in " + std::string(kVar))
        ->required();
    check->add_option("--y", y_text, "Candidate y as a polynomial in " + std::string(kVar))
        ->required();

    CLI::App* classify = app.add_subcommand(
        "classify", "Exponents m in [-N, N] whose H_m is a square up to a constant");
    classify->add_option("--n", classify_n, "Range bound N")->required();

    CLI::App* units = app.add_subcommand(
        "units", "Decompose a unit a + b*u of the quadratic extension as c * u^n");
    units->add_option("--lambda", lambda_text)->required();
    units->add_option("--a", a_text, "Coordinate a as a polynomial in " + std::string(kVar))
        ->required();
    units->add_option("--b", b_text, "Coordinate b as a polynomial in " + std::string(kVar))
        ->required();

    CLI::App* search = app.add_subcommand(
        "search", "Exhaustive solution search over bounded-degree candidate pairs");
    search->add_option("--lambda", lambda_text)->required();
    search->add_option("--xi", xi_text)->required();
    search->add_option("--max-deg", max_deg, "Maximum candidate degree")->required();
    search->add_option("--coeff-set", coeff_set_text, "Comma-separated coefficients")->required();
    search->add_option("--budget", budget, "Candidate-pair budget (default 1e8)");

    CLI::App* table = app.add_subcommand("table", "Companion-sequence table U_n, V_n, H_n");
    table->add_option("--n-range", n_range_text, "Index range MIN..MAX, e.g. -3..3")->required();

    for (CLI::App* sub : {solve, check, classify, units, search, table}) {
        sub->add_option("--output", output, "Output format (only \"json\")");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        emit(error_json("UsageError", e.what()));
        return kExitDomain;
    }

    try {
        if (output != "json") {
            throw DomainError("InvalidArgument", "unsupported --output format: " + output);
        }
        if (solve->parsed()) {
            ThueInstance inst(parse_poly(lambda_text, kVar), parse_gauss_rat(xi_text));
            emit(solve_result_json(inst, solution_set(inst)));
        } else if (check->parsed()) {
            ThueInstance inst(parse_poly(lambda_text, kVar), parse_gauss_rat(xi_text));
            Classification c =
                classify_solution(inst, parse_poly(x_text, kVar), parse_poly(y_text, kVar));
            emit(check_result_json(inst, c));
        } else if (classify->parsed()) {
            emit(classify_result_json(classify_square_exponents(classify_n)));
        } else if (units->parsed()) {
            QuadExtRing ring(parse_poly(lambda_text, kVar));
            QuadExtElem t{parse_poly(a_text, kVar), parse_poly(b_text, kVar)};
            emit(units_result_json(ring.unit_decompose(t)));
        } else if (search->parsed()) {
            ThueInstance inst(parse_poly(lambda_text, kVar), parse_gauss_rat(xi_text));
            std::vector<GaussRat> coeffs = parse_coeff_set(coeff_set_text);
            std::sort(coeffs.begin(), coeffs.end());
            coeffs.erase(std::unique(coeffs.begin(), coeffs.end()), coeffs.end());
            auto found = brute_search(inst, max_deg, coeffs, budget);
            emit(search_result_json(inst, max_deg, coeffs, budget, found));
        } else if (table->parsed()) {
            auto [lo, hi] = parse_n_range(n_range_text);
            emit(table_result_json(lo, hi));
        }
        return kExitOk;
    } catch (const DomainError& e) {
        emit(error_json(e.kind(), e.what()));
        return kExitDomain;
    } catch (const InternalError& e) {
        emit(error_json(e.kind(), e.what()));
        return kExitInternal;
    }
}

} // namespace

int main(int argc, char** argv) { return run(argc, argv); }
