// Command-line surface over the library: system validation, function
// evaluation, graph sampling, level/value set analysis, jump reports, and
// fractal dimensions. All output is deterministic for fixed inputs.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qstar/qstar.hpp"

namespace {

using nlohmann::ordered_json;
using namespace qstar;

constexpr int kExitDomain = 2;
constexpr int kExitBudget = 3;

struct options {
    std::string config;
    std::string format = "plain";
    unsigned precision = 12;
    std::size_t rank = 64;
    double tol = 1e-9;
    std::uint64_t cap = 4096;
};

std::string dec(const rational& r, unsigned precision) {
    return to_decimal_string(r, precision);
}

void emit_record(const options& opt, const std::vector<std::pair<std::string, std::string>>& kv) {
    if (opt.format == "json") {
        ordered_json rec;
        for (const auto& [k, v] : kv) rec[k] = v;
        std::cout << rec.dump() << "\n";
    } else if (opt.format == "csv") {
        for (std::size_t i = 0; i < kv.size(); ++i)
            std::cout << kv[i].first << (i + 1 < kv.size() ? "," : "\n");
        for (std::size_t i = 0; i < kv.size(); ++i)
            std::cout << kv[i].second << (i + 1 < kv.size() ? "," : "\n");
    } else {
        for (const auto& [k, v] : kv) std::cout << k << ": " << v << "\n";
    }
}

void emit_table(const options& opt, const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows) {
    if (opt.format == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& row : rows) {
            ordered_json rec;
            for (std::size_t i = 0; i < header.size(); ++i) rec[header[i]] = row[i];
            arr.push_back(rec);
        }
        std::cout << arr.dump() << "\n";
    } else {
        for (std::size_t i = 0; i < header.size(); ++i)
            std::cout << header[i] << (i + 1 < header.size() ? "," : "\n");
        for (const auto& row : rows)
            for (std::size_t i = 0; i < row.size(); ++i)
                std::cout << row[i] << (i + 1 < row.size() ? "," : "\n");
    }
}

int cmd_validate(const options& opt) {
    qstar_system sys = load_system(opt.config);
    if (auto err = validate(sys)) {
        std::cerr << "invalid system: " << *err << "\n";
        return kExitDomain;
    }
    entry_bounds b = compute_bounds(sys);
    emit_record(opt, {
        {"status", "ok"},
        {"s", std::to_string(sys.base)},
        {"prefix_columns", std::to_string(sys.prefix.size())},
        {"period_columns", std::to_string(sys.period.size())},
        {"min_entry", b.min_entry.str()},
        {"max_entry", b.max_entry.str()},
        {"max_product_vanishes", "yes"},
    });
    return 0;
}

bool looks_like_rational(const std::string& s) {
    return s.find('/') != std::string::npos || s.find('.') != std::string::npos;
}

int cmd_eval(const options& opt, const std::string& a_str, const std::string& x_str) {
    qstar_system sys = load_system(opt.config);
    require_valid(sys);
    s_adic_param a{parse_digit_seq(a_str, sys.base)};
    if (looks_like_rational(x_str)) {
        rational x = parse_rational(x_str);
        point_eval pe = eval_at_point(sys, a, x, opt.rank);
        emit_record(opt, {
            {"x", x.str()},
            {"value", pe.value.str()},
            {"value_dec", dec(pe.value, opt.precision)},
            {"error_bound", pe.error_bound.str()},
            {"exact", pe.error_bound == 0 ? "yes" : "no"},
        });
    } else {
        digit_seq x = parse_digit_seq(x_str, sys.base);
        digit_seq image = apply_digits(a, canonicalize(x));
        rational value = decode(sys, image);
        emit_record(opt, {
            {"x", render(normalize(x))},
            {"x_value", decode(sys, x).str()},
            {"image_digits", render(image)},
            {"value", value.str()},
            {"value_dec", dec(value, opt.precision)},
            {"error_bound", "0"},
        });
    }
    return 0;
}

int cmd_graph(const options& opt, const std::string& a_str, std::size_t depth) {
    qstar_system sys = load_system(opt.config);
    require_valid(sys);
    s_adic_param a{parse_digit_seq(a_str, sys.base)};
    std::uint64_t points = 1;
    for (std::size_t i = 0; i < depth; ++i) {
        points *= static_cast<std::uint64_t>(sys.base);
        if (points > opt.cap) throw budget_error("graph would emit more than cap points");
    }
    std::vector<std::vector<std::string>> rows;
    std::vector<int> word(depth, 0);
    for (;;) {
        digit_seq x = normalize({sys.base, word, {0}});
        rational xv = decode(sys, x);
        rational fv = eval(sys, a, x);
        rows.push_back({xv.str(), dec(xv, opt.precision), fv.str(), dec(fv, opt.precision),
                        render(x)});
        std::size_t i = depth;
        bool advanced = false;
        while (i > 0) {
            --i;
            if (++word[i] < sys.base) {
                advanced = true;
                break;
            }
            word[i] = 0;
        }
        if (!advanced) break;
    }
    emit_table(opt, {"x", "x_dec", "f", "f_dec", "x_digits"}, rows);
    return 0;
}

int cmd_levelset(const options& opt, const std::string& a_str, const std::string& y0_str,
                 bool enumerate) {
    qstar_system sys = load_system(opt.config);
    require_valid(sys);
    s_adic_param a{parse_digit_seq(a_str, sys.base)};
    digit_seq y0 = parse_digit_seq(y0_str, sys.base);
    level_profile_result prof = level_profile(a, y0);
    emit_record(opt, {
        {"classification", to_string(prof.classification)},
        {"count", prof.classification == level_kind::finite ? prof.count.str() : "-"},
    });
    if (enumerate) {
        std::vector<level_point> pts = level_enumerate(sys, a, y0, bigint(opt.cap));
        std::vector<std::vector<std::string>> rows;
        for (const auto& p : pts)
            rows.push_back({p.value.str(), dec(p.value, opt.precision), render(p.digits)});
        emit_table(opt, {"x", "x_dec", "x_digits"}, rows);
    }
    return 0;
}

int cmd_valueset(const options& opt, const std::string& a_str) {
    qstar_system sys = load_system(opt.config);
    require_valid(sys);
    s_adic_param a{parse_digit_seq(a_str, sys.base)};
    value_set_spec spec = value_set(a);
    rational measure = value_set_measure(sys, spec);
    rational sup = value_set_sup(sys, a);
    emit_record(opt, {
        {"classification", to_string(spec.classification)},
        {"measure", measure.str()},
        {"sup", sup.str()},
        {"sup_dec", dec(sup, opt.precision)},
    });
    if (spec.classification != value_set_kind::cantor_nowhere_dense) {
        std::vector<std::vector<std::string>> rows;
        for (const auto& iv : value_set_intervals(sys, spec))
            rows.push_back({iv.left.str(), iv.right.str(), dec(iv.left, opt.precision),
                            dec(iv.right, opt.precision)});
        emit_table(opt, {"left", "right", "left_dec", "right_dec"}, rows);
    }
    return 0;
}

int cmd_dimension(const options& opt, const std::string& v_str, const std::string& a_str,
                  const std::string& y0_str) {
    qstar_system sys = load_system(opt.config);
    require_valid(sys);
    if (!sys.prefix.empty() || sys.period.size() != 1)
        throw std::domain_error("dimension requires a self-similar system (single period column)");
    const stochastic_column& col = sys.period.front();
    double d;
    std::string target;
    if (!v_str.empty()) {
        digit_set v;
        for (int digit : detail::parse_digit_run(v_str, sys.base)) v.push_back(digit);
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
        d = moran_dimension(col, v, opt.tol);
        target = "C[V]";
    } else if (!a_str.empty() && !y0_str.empty()) {
        s_adic_param a{parse_digit_seq(a_str, sys.base)};
        d = level_set_dimension(col, a, parse_digit_seq(y0_str, sys.base), opt.tol);
        target = "level set";
    } else {
        throw std::domain_error("dimension needs either --v or both --a and --y0");
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12f", d);
    char tolbuf[64];
    std::snprintf(tolbuf, sizeof(tolbuf), "%g", opt.tol);
    emit_record(opt, {{"target", target}, {"dimension", buf}, {"tol", tolbuf}});
    return 0;
}

int cmd_jump(const options& opt, const std::string& a_str, const std::string& base_str) {
    qstar_system sys = load_system(opt.config);
    require_valid(sys);
    s_adic_param a{parse_digit_seq(a_str, sys.base)};
    std::vector<int> base = detail::parse_digit_run(base_str, sys.base);
    jump_report rep = jump(sys, a, base);
    emit_record(opt, {
        {"point", rep.point.str()},
        {"point_dec", dec(rep.point, opt.precision)},
        {"value_canonical", rep.value_canonical.str()},
        {"limit_other", rep.limit_other.str()},
        {"gap", rep.gap.str()},
        {"gap_dec", dec(rep.gap, opt.precision)},
    });
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    options opt;
    std::string a_str, x_str, y0_str, v_str, base_str;
    std::size_t depth = 3;
    bool enumerate = false;

    CLI::App app{"Exact analysis of polybasic digit expansions and the |a_n - alpha_n| function family"};
    app.require_subcommand(1);
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "csv", "plain"}));
    app.add_option("--precision", opt.precision, "Decimal digits in rendered values")->check(CLI::PositiveNumber);
    app.add_option("--rank", opt.rank, "Digit budget for encoding rationals")->check(CLI::PositiveNumber);
    app.add_option("--tol", opt.tol, "Bisection tolerance for dimensions");
    app.add_option("--cap", opt.cap, "Budget for enumerations and graph sampling");

    auto add_config = [&](CLI::App* sub) {
        sub->fallthrough();
        sub->add_option("config,--config", opt.config, "System description JSON");
    };

    auto* validate_cmd = app.add_subcommand("validate", "Check a system description");
    add_config(validate_cmd);

    auto* eval_cmd = app.add_subcommand("eval", "Evaluate f_a at a digit string or rational");
    add_config(eval_cmd);
    eval_cmd->add_option("--a", a_str, "Parameter digits, e.g. \"(314)\"")->required();
    eval_cmd->add_option("--x", x_str, "Point: digit string or rational")->required();

    auto* graph_cmd = app.add_subcommand("graph", "Sample (x, f_a(x)) on all rank-m cylinder left endpoints");
    add_config(graph_cmd);
    graph_cmd->add_option("--a", a_str)->required();
    graph_cmd->add_option("-m,--depth", depth, "Cylinder rank to sample");

    auto* level_cmd = app.add_subcommand("levelset", "Classify (and enumerate) a level set");
    add_config(level_cmd);
    level_cmd->add_option("--a", a_str)->required();
    level_cmd->add_option("--y0", y0_str, "Level digits")->required();
    level_cmd->add_flag("--enumerate", enumerate, "List the preimages when finite");

    auto* value_cmd = app.add_subcommand("valueset", "Classify the value set of f_a");
    add_config(value_cmd);
    value_cmd->add_option("--a", a_str)->required();

    auto* dim_cmd = app.add_subcommand("dimension", "Fractal dimension in the self-similar case");
    add_config(dim_cmd);
    dim_cmd->add_option("--v", v_str, "Digit subset, e.g. \"01\" or \"0,1\"");
    dim_cmd->add_option("--a", a_str);
    dim_cmd->add_option("--y0", y0_str);

    auto* jump_cmd = app.add_subcommand("jump", "Jump report at a binary point");
    add_config(jump_cmd);
    jump_cmd->add_option("--a", a_str)->required();
    jump_cmd->add_option("--base", base_str, "Binary point base digits")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitDomain;
    }

    try {
        if (validate_cmd->parsed()) return cmd_validate(opt);
        if (eval_cmd->parsed()) return cmd_eval(opt, a_str, x_str);
        if (graph_cmd->parsed()) return cmd_graph(opt, a_str, depth);
        if (level_cmd->parsed()) return cmd_levelset(opt, a_str, y0_str, enumerate);
        if (value_cmd->parsed()) return cmd_valueset(opt, a_str);
        if (dim_cmd->parsed()) return cmd_dimension(opt, v_str, a_str, y0_str);
        if (jump_cmd->parsed()) return cmd_jump(opt, a_str, base_str);
    } catch (const budget_error& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
    return kExitDomain;
}
