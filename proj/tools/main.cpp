// Command-line front end: feasibility checks, parameter solving, extremal
// sampling, norm tables, Favard constants. Exit codes: 0 success, 2
// mathematically infeasible instance, 1 usage or domain error.

#include "kolmo/errors.hpp"
#include "kolmo/euler.hpp"
#include "kolmo/json_io.hpp"
#include "kolmo/ppoly.hpp"
#include "kolmo/psi.hpp"
#include "kolmo/solver.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

/// Shortest round-trip decimal representation, '.' separator, no locale.
std::string fmt(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::vector<double> parse_list(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        out.push_back(std::stod(item));
    }
    return out;
}

void emit(const json& envelope) {
    std::cout << envelope.dump(2) << "\n";
}

int emit_error(const std::string& command, const json& inputs, const std::string& message) {
    emit(json{{"command", command},
              {"inputs", inputs},
              {"result", json{{"error", message}}},
              {"diagnostics", json::array({message})}});
    return 1;
}

struct InstanceFlags {
    int r = 0, k2 = 0;
    double m0 = 0, mk2 = 0, mrm2 = 0, mr = 0;

    void add_to(CLI::App& cmd) {
        cmd.add_option("--r", r, "spline order r (>= 4)")->required();
        cmd.add_option("--k2", k2, "intermediate derivative order (0 < k2 < r-2)")->required();
        cmd.add_option("--m0", m0, "target norm of the function")->required();
        cmd.add_option("--mk2", mk2, "target norm of the k2-th derivative")->required();
        cmd.add_option("--mrm2", mrm2, "target norm of the (r-2)-th derivative")->required();
        cmd.add_option("--mr", mr, "target norm of the r-th derivative")->required();
    }

    kolmo::ProblemInstance instance() const {
        return kolmo::ProblemInstance{r, k2, m0, mk2, mrm2, mr};
    }

    json echo() const {
        return json{{"r", r}, {"k2", k2}, {"m0", m0}, {"mk2", mk2}, {"mrm2", mrm2}, {"mr", mr}};
    }
};

json report_json(const kolmo::FeasibilityReport& rep) {
    json j = kolmo::to_json(rep);
    return j;
}

int run_check(const InstanceFlags& flags, bool csv) {
    kolmo::FeasibilityReport rep;
    try {
        rep = kolmo::decide(flags.instance());
    } catch (const std::exception& e) {
        return emit_error("check", flags.echo(), e.what());
    }
    json diagnostics = json::array();
    if (rep.psi_cap_clamped)
        diagnostics.push_back("condition a) failed; psi_cap reported with a clamped to 0 for diagnosis");
    if (csv) {
        std::cout << "feasible,cond_a_holds,cond_a_margin,cond_b_holds,cond_b_margin,psi_cap\n"
                  << (rep.feasible ? 1 : 0) << ',' << (rep.condition_a.holds ? 1 : 0) << ','
                  << fmt(rep.condition_a.margin) << ',' << (rep.condition_b.holds ? 1 : 0) << ','
                  << fmt(rep.condition_b.margin) << ',' << fmt(rep.psi_cap) << "\n";
    } else {
        emit(json{{"command", "check"},
                  {"inputs", flags.echo()},
                  {"result", report_json(rep)},
                  {"diagnostics", diagnostics}});
    }
    return rep.feasible ? 0 : 2;
}

int run_solve(const InstanceFlags& flags, const std::string& emit_path, bool csv) {
    kolmo::FeasibilityReport rep;
    try {
        rep = kolmo::decide(flags.instance());
    } catch (const std::exception& e) {
        return emit_error("solve", flags.echo(), e.what());
    }
    if (csv) {
        std::cout << "feasible,a,b,lambda,psi_cap\n";
        if (rep.params)
            std::cout << (rep.feasible ? 1 : 0) << ',' << fmt(rep.params->a) << ','
                      << fmt(rep.params->b) << ',' << fmt(rep.params->lambda) << ','
                      << fmt(rep.psi_cap) << "\n";
        else
            std::cout << "0,,,," << fmt(rep.psi_cap) << "\n";
        return rep.feasible ? 0 : 2;
    }
    json result = report_json(rep);
    json diagnostics = json::array();
    if (rep.feasible) {
        const auto norms = kolmo::extremal_norms(rep);
        result["extremal_norms"] = json{{"m0", norms[0]}, {"mk2", norms[1]}, {"mrm2", norms[2]}, {"mr", norms[3]}};
        if (!emit_path.empty()) {
            std::ofstream out(emit_path);
            if (!out)
                return emit_error("solve", flags.echo(), "cannot open output path: " + emit_path);
            out << kolmo::to_json(*rep.extremal).dump(2) << "\n";
            diagnostics.push_back("extremal function written to " + emit_path);
        }
    } else if (rep.psi_cap_clamped) {
        diagnostics.push_back("condition a) failed; psi_cap reported with a clamped to 0 for diagnosis");
    }
    emit(json{{"command", "solve"},
              {"inputs", flags.echo()},
              {"result", result},
              {"diagnostics", diagnostics}});
    return rep.feasible ? 0 : 2;
}

int run_eval(const std::string& input, double from, double to, int points, int derivative) {
    json inputs{{"input", input}, {"from", from}, {"to", to}, {"points", points}, {"derivative", derivative}};
    if (points < 1)
        return emit_error("eval", inputs, "--points must be >= 1");
    if (derivative < 0)
        return emit_error("eval", inputs, "--derivative must be >= 0");
    std::ifstream in(input);
    if (!in)
        return emit_error("eval", inputs, "cannot read input path: " + input);
    std::optional<kolmo::PeriodicPiecewisePoly> p;
    try {
        p = kolmo::ppoly_from_json(json::parse(in));
    } catch (const std::exception& e) {
        return emit_error("eval", inputs, std::string("invalid piecewise-polynomial JSON: ") + e.what());
    }
    const kolmo::PeriodicPiecewisePoly q = p->derivative(derivative);
    std::cout << "t,value\n";
    for (int i = 0; i < points; ++i) {
        const double t = points == 1 ? from : from + (to - from) * i / (points - 1);
        std::cout << fmt(t) << ',' << fmt(q.evaluate(t)) << "\n";
    }
    return 0;
}

int run_norms(int r, const std::string& a_grid_csv, const std::string& s_list_csv, bool csv) {
    json inputs{{"r", r}, {"a_grid", a_grid_csv}, {"s_list", s_list_csv}};
    if (r < 1 || r > kolmo::max_order)
        return emit_error("norms", inputs, "--r must be in [1, 16]");
    const std::vector<double> a_grid = parse_list(a_grid_csv);
    if (a_grid.empty())
        return emit_error("norms", inputs, "--a-grid must contain at least one value");
    std::vector<int> s_list;
    if (s_list_csv.empty()) {
        for (int s = 1; s <= r; ++s)
            s_list.push_back(s);
    } else {
        for (double v : parse_list(s_list_csv))
            s_list.push_back(static_cast<int>(v));
    }
    for (double a : a_grid)
        if (a < 0.0)
            return emit_error("norms", inputs, "plateau values must be >= 0");
    for (int s : s_list)
        if (s < 1 || s > kolmo::max_order)
            return emit_error("norms", inputs, "orders in --s-list must be in [1, 16]");

    std::vector<std::vector<double>> values(s_list.size(), std::vector<double>(a_grid.size()));
    for (std::size_t si = 0; si < s_list.size(); ++si)
        for (std::size_t ai = 0; ai < a_grid.size(); ++ai)
            values[si][ai] = kolmo::psi_norm(a_grid[ai], s_list[si]);

    if (csv) {
        std::cout << "s";
        for (double a : a_grid)
            std::cout << ",a=" << fmt(a);
        std::cout << "\n";
        for (std::size_t si = 0; si < s_list.size(); ++si) {
            std::cout << s_list[si];
            for (double v : values[si])
                std::cout << ',' << fmt(v);
            std::cout << "\n";
        }
    } else {
        emit(json{{"command", "norms"},
                  {"inputs", inputs},
                  {"result", json{{"a_grid", a_grid}, {"s_list", s_list}, {"values", values}}},
                  {"diagnostics", json::array()}});
    }
    return 0;
}

int run_favard(int max_r, bool csv) {
    json inputs{{"max_r", max_r}};
    if (max_r < 0 || max_r > kolmo::max_order)
        return emit_error("favard", inputs, "--max-r must be in [0, 16]");
    std::vector<double> values(max_r + 1);
    for (int r = 0; r <= max_r; ++r)
        values[r] = kolmo::favard(r);
    if (csv) {
        std::cout << "r,K\n";
        for (int r = 0; r <= max_r; ++r)
            std::cout << r << ',' << fmt(values[r]) << "\n";
    } else {
        emit(json{{"command", "favard"},
                  {"inputs", inputs},
                  {"result", json{{"values", values}}},
                  {"diagnostics", json::array()}});
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"comparison splines and four-norm feasibility"};
    app.require_subcommand(1);

    InstanceFlags check_flags, solve_flags;
    bool check_csv = false, solve_csv = false, norms_csv = false, favard_csv = false;
    std::string emit_path, eval_input, a_grid_csv, s_list_csv;
    double eval_from = 0.0, eval_to = 1.0;
    int eval_points = 100, eval_derivative = 0, norms_r = 4, favard_max_r = 8;

    CLI::App* check = app.add_subcommand("check", "decide feasibility of a four-norm instance");
    check_flags.add_to(*check);
    auto* check_csv_opt = check->add_flag("--csv", check_csv, "emit a CSV summary instead of JSON");
    check->add_flag("--json", "emit the JSON envelope (default)")->excludes(check_csv_opt);

    CLI::App* solve = app.add_subcommand("solve", "solve for (a, b, lambda) and the extremal function");
    solve_flags.add_to(*solve);
    solve->add_option("--emit-extremal", emit_path, "write the extremal function as JSON to this path");
    auto* solve_csv_opt = solve->add_flag("--csv", solve_csv, "emit a CSV summary instead of JSON");
    solve->add_flag("--json", "emit the JSON envelope (default)")->excludes(solve_csv_opt);

    CLI::App* eval = app.add_subcommand("eval", "sample a stored piecewise polynomial as CSV");
    eval->add_option("--input", eval_input, "path to a piecewise-polynomial JSON file")->required();
    eval->add_option("--from", eval_from, "start of the sampling window")->required();
    eval->add_option("--to", eval_to, "end of the sampling window")->required();
    eval->add_option("--points", eval_points, "number of samples")->required();
    eval->add_option("--derivative", eval_derivative, "derivative order to sample");

    CLI::App* norms = app.add_subcommand("norms", "table of spline norms N_s(a)");
    norms->add_option("--r", norms_r, "maximum order (default s-list is 1..r)")->required();
    norms->add_option("--a-grid", a_grid_csv, "comma-separated plateau values")->required();
    norms->add_option("--s-list", s_list_csv, "comma-separated orders (default 1..r)");
    auto* norms_csv_opt = norms->add_flag("--csv", norms_csv, "emit CSV instead of JSON");
    norms->add_flag("--json", "emit the JSON envelope (default)")->excludes(norms_csv_opt);

    CLI::App* favard_cmd = app.add_subcommand("favard", "Favard constants K_0..K_max");
    favard_cmd->add_option("--max-r", favard_max_r, "largest order")->required();
    auto* favard_csv_opt = favard_cmd->add_flag("--csv", favard_csv, "emit CSV instead of JSON");
    favard_cmd->add_flag("--json", "emit the JSON envelope (default)")->excludes(favard_csv_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (check->parsed())
            return run_check(check_flags, check_csv);
        if (solve->parsed())
            return run_solve(solve_flags, emit_path, solve_csv);
        if (eval->parsed())
            return run_eval(eval_input, eval_from, eval_to, eval_points, eval_derivative);
        if (norms->parsed())
            return run_norms(norms_r, a_grid_csv, s_list_csv, norms_csv);
        if (favard_cmd->parsed())
            return run_favard(favard_max_r, favard_csv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
