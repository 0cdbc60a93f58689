// Copyright 2026 The dccode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// dccode command-line tool. Exit status: 0 success, 1 mismatch or
// counterexample, 2 usage error.

#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dccode/bordered.hpp"
#include "dccode/circulant.hpp"
#include "dccode/dc_codes.hpp"
#include "dccode/linear_code.hpp"
#include "dccode/report_io.hpp"
#include "dccode/search.hpp"
#include "dccode/tables.hpp"
#include "json.hpp"

namespace {

using dccode::RingElement;
using Json = nlohmann::ordered_json;

constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

struct Options {
    std::string kind = "selfdual_dc";
    std::size_t m = 0;
    std::size_t m_max = 0;
    std::vector<std::size_t> weights;
    unsigned workers = 1;
    std::string format = "csv";
    std::string oracle;
    std::string out;
    std::string f;
    int alpha = 0;
    bool bordered = false;
    bool explain = false;
};

int run_search(const Options& o) {
    dccode::SearchConfig cfg;
    cfg.kind = dccode::parse_search_kind(o.kind);
    cfg.m_min = o.m;
    cfg.m_max = o.m_max == 0 ? o.m : o.m_max;
    if (!o.weights.empty()) cfg.weight_filter = std::set<std::size_t>(o.weights.begin(), o.weights.end());
    cfg.workers = o.workers;
    cfg.output_format = dccode::parse_output_format(o.format);
    if (!o.oracle.empty()) cfg.oracle = dccode::parse_oracle_policy(o.oracle);
    const std::string text = dccode::emit(dccode::search(cfg), cfg.output_format);
    if (o.out.empty()) {
        std::cout << text;
    } else {
        std::ofstream file(o.out, std::ios::binary);
        if (!file) throw std::invalid_argument("cannot open " + o.out + " for writing");
        file << text;
    }
    return 0;
}

Json metrics_json(const dccode::BinaryCode& code) {
    const dccode::CodeMetrics mt = dccode::compute_metrics(code);
    Json j;
    j["n"] = code.length();
    j["k"] = code.dimension();
    j["d"] = mt.min_distance;
    j["weight_distribution"] = mt.weight_distribution;
    j["hull_dimension"] = mt.hull_dimension;
    j["self_dual"] = mt.self_dual;
    j["extremal"] = mt.self_dual && mt.min_distance == dccode::extremal_bound(code.length());
    j["doubly_even"] = mt.doubly_even;
    return j;
}

int run_verify(const Options& o) {
    const RingElement f = dccode::parse_ring_element(o.f, o.m);
    Json j;
    j["m"] = o.m;
    j["f"] = dccode::to_string(f);
    j["bordered"] = o.bordered;
    if (o.bordered) {
        j["alpha"] = o.alpha;
        j.update(metrics_json(dccode::build(dccode::BorderedDescriptor(f, o.alpha != 0))));
    } else {
        if (o.alpha != 0) throw std::invalid_argument("--alpha requires --bordered");
        j.update(metrics_json(dccode::build(dccode::DcDescriptor(f))));
    }
    print_json(j);
    return 0;
}

int run_count(const Options& o) {
    if (!o.explain) {
        std::cout << dccode::count_orthogonal(o.m).str() << '\n';
        return 0;
    }
    const auto ex = dccode::explain_count_orthogonal(o.m);
    auto set_text = [](const std::vector<std::size_t>& v) {
        std::string s = "{";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s + "}";
    };
    std::cout << "m = " << ex.m << ", odd part " << ex.odd_core << '\n';
    for (const auto& t : ex.terms) {
        std::cout << "  coset " << set_text(t.residues);
        if (t.self_reciprocal) {
            std::cout << " self-reciprocal";
        } else {
            std::cout << " paired with " << set_text(t.partner);
        }
        std::cout << ": factor " << t.factor.str() << '\n';
    }
    std::cout << "  count at " << ex.odd_core << " = " << ex.odd_count.str() << '\n';
    for (const auto& s : ex.steps) {
        std::cout << "  " << s.from << " -> " << s.to << ": multiply by 2^" << s.exponent << '\n';
    }
    std::cout << "total " << ex.total.str() << '\n';
    return 0;
}

int run_dc_classify(const Options& o) {
    const dccode::DcDescriptor d(o.m, dccode::parse_ring_element(o.f, o.m));
    const bool sd = dccode::is_self_dual(d);
    const dccode::BinaryCode code = dccode::build(d);
    const dccode::CodeMetrics mt = dccode::compute_metrics(code);
    const bool oracle_extremal = mt.self_dual && mt.min_distance == dccode::extremal_bound(code.length());
    Json j;
    j["m"] = o.m;
    j["f"] = dccode::to_string(d.f());
    j["self_dual"] = sd;
    j["weight"] = dccode::weight(d.f());
    j["predicate_used"] = nullptr;
    j["extremal"] = false;
    j["oracle_d"] = mt.min_distance;
    int rc = sd == mt.self_dual ? 0 : kExitMismatch;
    if (sd) {
        j["predicate_used"] = std::string(dccode::to_string(dccode::extremality_route(o.m, dccode::weight(d.f()))));
        const auto predicted = dccode::predicted_extremal(d);
        j["extremal"] = predicted.value_or(oracle_extremal);
        if (predicted && *predicted != oracle_extremal) rc = kExitMismatch;
    }
    print_json(j);
    if (rc != 0) std::cerr << "predicate disagrees with the oracle\n";
    return rc;
}

int run_dc_canonical(const Options& o) {
    const dccode::DcDescriptor d(o.m, dccode::parse_ring_element(o.f, o.m));
    std::cout << dccode::to_string(dccode::canonical_form(d)) << '\n';
    return 0;
}

int run_bordered_classify(const Options& o) {
    const dccode::BorderedDescriptor b(o.m, dccode::parse_ring_element(o.f, o.m), o.alpha != 0);
    const dccode::BinaryCode code = dccode::build(b);
    const dccode::CodeMetrics mt = dccode::compute_metrics(code);
    const bool sd = dccode::is_self_dual(b);
    const bool lcd = b.alpha() ? dccode::bordered_lcd_alpha1(b) : dccode::bordered_alpha0_is_lcd(b);
    Json j;
    j["m"] = o.m;
    j["f"] = dccode::to_string(b.f());
    j["alpha"] = o.alpha;
    j["self_dual"] = sd;
    j["lcd"] = lcd;
    j["n"] = code.length();
    j["k"] = code.dimension();
    j["d"] = mt.min_distance;
    j["hull_dim"] = mt.hull_dimension;
    print_json(j);
    if (sd != mt.self_dual || lcd != (mt.hull_dimension == 0)) {
        std::cerr << "predicate disagrees with the oracle\n";
        return kExitMismatch;
    }
    return 0;
}

int run_bordered_lift(const Options& o) {
    const RingElement f = dccode::parse_ring_element(o.f, o.m);
    const dccode::DcDescriptor d(f);
    std::string construction;
    std::optional<dccode::BorderedDescriptor> b;
    if (o.m % 2 == 1 && dccode::is_self_dual(d)) {
        construction = "self_dual";
        b = dccode::complement_lift(f);
    } else if (dccode::dc_is_lcd(d)) {
        construction = "lcd";
        b = dccode::bordered_lcd_alpha0(f);
    } else {
        throw std::invalid_argument("f is neither self-dual (with odd m) nor gcd-admissible");
    }
    const dccode::BinaryCode code = dccode::build(*b);
    const dccode::CodeMetrics mt = dccode::compute_metrics(code);
    Json j;
    j["construction"] = construction;
    j["m"] = o.m;
    j["f"] = dccode::to_string(f);
    j["complement"] = dccode::to_string(b->f());
    j["alpha"] = 0;
    j["n"] = code.length();
    j["k"] = code.dimension();
    j["d"] = mt.min_distance;
    j["self_dual"] = mt.self_dual;
    j["hull_dim"] = mt.hull_dimension;
    print_json(j);
    const bool ok = construction == "self_dual" ? mt.self_dual : mt.hull_dimension == 0;
    if (!ok) std::cerr << "lifted code does not have the expected property\n";
    return ok ? 0 : kExitMismatch;
}

void add_m(CLI::App* cmd, Options& o) { cmd->add_option("--m", o.m, "Circulant size m")->required(); }
void add_f(CLI::App* cmd, Options& o) {
    cmd->add_option("--f", o.f, "Polynomial, sparse (x^3+x+1) or hex (m=7:0x0B)")->required();
}
void add_workers(CLI::App* cmd, Options& o) {
    cmd->add_option("--workers", o.workers, "Worker threads")->envname("DCCODE_WORKERS")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Double circulant code workbench"};
    app.set_config("--config", "", "Read options from a TOML/INI file");
    app.require_subcommand(1);
    Options o;
    std::function<int()> action;

    auto* search = app.add_subcommand("search", "Exhaustive search with equivalence-class deduplication");
    search->add_option("--kind", o.kind, "selfdual_dc, extremal_dc, lcd_dc, bordered_selfdual or bordered_lcd")
        ->check(CLI::IsMember({"selfdual_dc", "extremal_dc", "lcd_dc", "bordered_selfdual", "bordered_lcd"}));
    add_m(search, o);
    search->add_option("--m-max", o.m_max, "Upper end of the m range (default: --m)");
    search->add_option("--weight", o.weights, "Only patterns of these weights")->delimiter(',');
    add_workers(search, o);
    search->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    search->add_option("--oracle", o.oracle, "always, spot or off")->check(CLI::IsMember({"always", "spot", "off"}));
    search->add_option("--out", o.out, "Write output to FILE");
    search->callback([&] { action = [&] { return run_search(o); }; });

    auto* tables = app.add_subcommand("tables", "Reproduce the reference tables of extremal codes");
    add_workers(tables, o);
    tables->callback([&] {
        action = [&] { return dccode::print_tables_outcome(dccode::reproduce_tables(o.workers), std::cout); };
    });

    auto* verify = app.add_subcommand("verify", "Exact parameters of one code by full enumeration");
    add_m(verify, o);
    add_f(verify, o);
    verify->add_option("--alpha", o.alpha, "Corner entry, 0 or 1 (bordered only)")->check(CLI::Range(0, 1));
    verify->add_flag("--bordered", o.bordered, "Bordered construction");
    verify->callback([&] { action = [&] { return run_verify(o); }; });

    auto* count = app.add_subcommand("count-orthogonal", "Number of orthogonal m x m circulants");
    add_m(count, o);
    count->add_flag("--explain", o.explain, "Show the coset factors and doubling steps");
    count->callback([&] { action = [&] { return run_count(o); }; });

    auto* dc = app.add_subcommand("dc", "Double circulant codes");
    dc->require_subcommand(1);
    auto* dc_classify = dc->add_subcommand("classify", "Self-duality and extremality of (1, f)");
    add_m(dc_classify, o);
    add_f(dc_classify, o);
    dc_classify->callback([&] { action = [&] { return run_dc_classify(o); }; });
    auto* dc_canonical = dc->add_subcommand("canonical", "Least polynomial equivalent to f");
    add_m(dc_canonical, o);
    add_f(dc_canonical, o);
    dc_canonical->callback([&] { action = [&] { return run_dc_canonical(o); }; });

    auto* bordered = app.add_subcommand("bordered", "Bordered double circulant codes");
    bordered->require_subcommand(1);
    auto* b_classify = bordered->add_subcommand("classify", "Self-duality, LCD and parameters");
    add_m(b_classify, o);
    add_f(b_classify, o);
    b_classify->add_option("--alpha", o.alpha, "Corner entry, 0 or 1")->check(CLI::Range(0, 1));
    b_classify->callback([&] { action = [&] { return run_bordered_classify(o); }; });
    auto* b_lift = bordered->add_subcommand("lift", "Bordered code on the complement of f");
    add_m(b_lift, o);
    add_f(b_lift, o);
    b_lift->callback([&] { action = [&] { return run_bordered_lift(o); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }
    try {
        return action ? action() : kExitUsage;
    } catch (const dccode::CrossCheckFailure& e) {
        std::cerr << "counterexample: " << e.what() << '\n';
        return kExitMismatch;
    } catch (const dccode::EnumerationTooLarge& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
