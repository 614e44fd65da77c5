#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "msk/catalog.hpp"

namespace {

using msk::jsn;

jsn load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw msk::Error(msk::Errc::ParseError, "cannot open " + path);
    jsn j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw msk::Error(msk::Errc::ParseError, path + ": " + e.what());
    }
    return j;
}

void print_blaschke(std::ostream& os, const jsn& b) {
    os << "constant=(" << b["constant"][0].get<double>() << ","
       << b["constant"][1].get<double>() << ")";
    if (b["zeros"].empty()) {
        os << " [no zeros]";
        return;
    }
    os << " zeros:";
    for (const auto& z : b["zeros"])
        os << " (" << z["alpha"][0].get<double>() << "," << z["alpha"][1].get<double>() << ")^"
           << z["mult"].get<int>();
}

void pretty_print(const jsn& report) {
    std::cout << "command: " << report["command"].get<std::string>() << "\n";
    std::cout << "status:  " << report["status"].get<std::string>() << "\n";
    for (const auto& [key, value] : report.items()) {
        if (key == "command" || key == "status") continue;
        if (key == "delta_sequence" || (value.is_object() && value.contains("delta_sequence"))) {
            const jsn& seq = key == "delta_sequence" ? value : value["delta_sequence"];
            if (value.is_object()) {
                for (const auto& [k2, v2] : value.items()) {
                    if (k2 == "delta_sequence") continue;
                    std::cout << "  " << k2 << ": " << v2.dump() << "\n";
                }
            }
            std::cout << "  delta_sequence:\n";
            int k = 0;
            for (const auto& b : seq) {
                std::cout << "    delta_" << k++ << ": ";
                print_blaschke(std::cout, b);
                std::cout << "\n";
            }
            continue;
        }
        std::cout << "  " << key << ": " << value.dump() << "\n";
    }
}

int run_catalog(const std::string& name, bool replay, bool regen, bool input_only) {
    if (regen) {
        jsn all = jsn::object();
        for (const auto& e : msk::catalog()) all[e.name] = msk::run_command(e.command, e.input);
        std::cout << all.dump(1) << "\n";
        return 0;
    }
    if (!name.empty()) {
        const msk::CatalogEntry* e = msk::catalog_find(name);
        if (!e) {
            std::cerr << "no catalog entry named " << name << "\n";
            return 1;
        }
        if (input_only) {
            std::cout << e->input.dump(2) << "\n";
            return 0;
        }
        std::cout << jsn{{"name", e->name},
                         {"command", e->command},
                         {"input", e->input},
                         {"expected", e->expected}}
                         .dump(2)
                  << "\n";
        return 0;
    }
    int bad = 0;
    for (const auto& e : msk::catalog()) {
        if (replay) {
            msk::ReplayResult r = msk::catalog_replay(e);
            std::cout << (r.match ? "PASS " : "FAIL ") << e.name << "\n";
            if (!r.match) ++bad;
        } else {
            std::cout << e.name << "  (" << e.command << ")\n";
        }
    }
    return bad ? 2 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Operator-theoretic computations for rational matrix functions on the circle"};
    app.require_subcommand(1);

    std::string input_path;
    bool as_json = false;
    bool with_csv = false;
    double tol_override = 0.0;
    int grid = 0;
    int trunc_N = 24;
    std::string probe_str;
    app.add_flag("--json", as_json, "emit the canonical JSON report");
    app.add_flag("--csv", with_csv, "oracle: include the truncated section as re/im CSV");
    app.add_option("--tol", tol_override, "root clustering tolerance override")
        ->check(CLI::Range(1e-14, 1e-4));
    app.add_option("--grid", grid, "circle grid size")->check(CLI::Range(64, 8192));
    app.add_option("--N", trunc_N, "truncated operator section size")->check(CLI::Range(1, 512));
    app.add_option("--probe", probe_str, "probe point re,im for reconstructions");

    std::vector<CLI::App*> subs;
    for (const std::string& name : msk::command_names()) {
        CLI::App* sub = app.add_subcommand(name);
        sub->add_option("input", input_path, "input JSON file")->required();
        sub->fallthrough();
        subs.push_back(sub);
    }
    CLI::App* cat = app.add_subcommand("catalog", "built-in worked-example corpus");
    std::string cat_name;
    bool cat_replay = false, cat_regen = false, cat_input = false;
    cat->add_option("name", cat_name, "entry to print");
    cat->add_flag("--replay", cat_replay, "re-run entries against frozen reports");
    cat->add_flag("--regen", cat_regen, "print freshly computed reports for all entries");
    cat->add_flag("--input", cat_input, "print only the entry's input document");

    CLI11_PARSE(app, argc, argv);

    if (tol_override > 0.0) msk::tol().root_cluster = tol_override;
    if (grid > 0) msk::tol().grid_size = grid;

    try {
        if (cat->parsed()) return run_catalog(cat_name, cat_replay, cat_regen, cat_input);
        msk::RunOptions opts;
        opts.trunc_N = trunc_N;
        opts.section_csv = with_csv;
        if (!probe_str.empty()) {
            double re = 0.0, im = 0.0;
            if (std::sscanf(probe_str.c_str(), "%lf,%lf", &re, &im) != 2)
                throw msk::Error(msk::Errc::ParseError, "--probe expects re,im");
            opts.probe = msk::Complex(re, im);
        }
        for (size_t i = 0; i < subs.size(); ++i) {
            if (!subs[i]->parsed()) continue;
            jsn input = load_json(input_path);
            jsn report = msk::run_command(msk::command_names()[i], input, opts);
            if (as_json)
                std::cout << report.dump() << "\n";
            else
                pretty_print(report);
            return msk::exit_code_for(report);
        }
    } catch (const msk::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == msk::Errc::CoprimenessUndecided ? 3 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
