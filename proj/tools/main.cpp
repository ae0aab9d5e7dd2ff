// Command-line front end: case verification with machine-readable reports,
// ad-hoc class enumeration on a user-supplied lattice, and ad-hoc two-ray
// game evaluation.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or schema error.

#include "dpfano/catalog.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

constexpr const char* kVersion = "0.1.0";

struct LatticeFile {
    dpfano::LatticePtr lattice;
    std::map<std::string, dpfano::DivisorClass> classes;
    std::optional<dpfano::DivisorClass> polarization;
};

LatticeFile load_lattice_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw dpfano::SchemaError("cannot open lattice file '" + path + "'");
    dpfano::Json j;
    try {
        in >> j;
    } catch (const dpfano::Json::exception& e) {
        throw dpfano::SchemaError("lattice file '" + path + "': " + e.what());
    }
    LatticeFile out;
    out.lattice = dpfano::caseio::parse_lattice(j, path);
    for (int i = 0; i < out.lattice->rank(); ++i) {
        dpfano::IntVec unit(out.lattice->rank(), 0);
        unit[i] = 1;
        out.classes.emplace(out.lattice->basis()[i],
                            dpfano::DivisorClass(out.lattice, std::move(unit)));
    }
    if (j.contains("classes"))
        for (const auto& [name, coords] : j.at("classes").items())
            out.classes.insert_or_assign(
                name, dpfano::DivisorClass(out.lattice,
                                           dpfano::caseio::json_coords(coords, name)));
    if (j.contains("polarization")) {
        const std::string hname = j.at("polarization").get<std::string>();
        auto it = out.classes.find(hname);
        if (it == out.classes.end())
            throw dpfano::SchemaError("lattice file '" + path + "': polarization '" + hname +
                                      "' is not a class");
        out.polarization = it->second;
    }
    return out;
}

void write_output(const std::string& content, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw dpfano::SchemaError("cannot write output file '" + out_path + "'");
    out << content;
}

int run_verify(const std::string& case_id, bool all, const std::string& format,
               const std::string& out_path) {
    using namespace dpfano;
    std::vector<VerificationReport> reports;
    if (all) {
        reports = run_all();
    } else {
        reports.push_back(run_case(load_case(case_id)));
    }
    std::ostringstream os;
    emit_report(reports, format, os);
    write_output(os.str(), out_path);
    return summarize(reports).ok() ? 0 : 1;
}

int run_enumerate(const std::string& lattice_path, long long square,
                  const std::vector<std::string>& constraints, std::optional<long long> deg_max,
                  const std::string& format, const std::string& out_path) {
    using namespace dpfano;
    const LatticeFile file = load_lattice_file(lattice_path);

    std::vector<EqualityConstraint> eq;
    for (const auto& c : constraints) {
        const auto sep = c.find('=');
        if (sep == std::string::npos)
            throw SchemaError("constraint '" + c + "' is not of the form CLASS=VALUE");
        const std::string name = c.substr(0, sep);
        auto it = file.classes.find(name);
        if (it == file.classes.end())
            throw SchemaError("constraint class '" + name + "' is not defined in the lattice file");
        eq.push_back({it->second, Int(c.substr(sep + 1))});
    }
    std::optional<DegreeRange> range;
    if (deg_max) {
        if (!file.polarization)
            throw SchemaError("--deg-max needs a 'polarization' entry in the lattice file");
        range = DegreeRange{*file.polarization, 1, Int(*deg_max)};
    }

    const auto found = enum_classes(file.lattice, Int(square), eq, range);
    std::ostringstream os;
    if (format == "json") {
        Json out = Json::array();
        for (const auto& c : found) out.push_back(caseio::coords_json(c.coords));
        os << Json{{"lattice", file.lattice->label()},
                   {"square", square},
                   {"count", found.size()},
                   {"classes", std::move(out)}}
                  .dump(2)
           << "\n";
    } else {
        os << found.size() << " classes with square " << square << "\n";
        for (const auto& c : found) os << "  " << coords_str(c.coords) << " = " << class_str(c) << "\n";
    }
    write_output(os.str(), out_path);
    return 0;
}

int run_game(int d, long long kw3, long long kwb, long long g, const std::string& format,
             const std::string& out_path) {
    using namespace dpfano;
    const GameResult r = dpd_transform({Int(kw3), Int(kwb), Int(g), d});
    std::ostringstream os;
    if (format == "json") {
        os << Json{{"d", d},
                   {"kx3", caseio::rat_json(r.kx3)},
                   {"kx_dot_c", caseio::rat_json(r.kx_dot_c)},
                   {"z", caseio::rat_json(r.z)}}
                  .dump(2)
           << "\n";
    } else {
        os << "(-K_X)^3  = " << rat_str(r.kx3) << "\n"
           << "-K_X . C  = " << rat_str(r.kx_dot_c) << "\n"
           << "z         = " << rat_str(r.z) << "\n";
    }
    write_output(os.str(), out_path);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of del Pezzo fibration constructions on almost Fano threefolds"};
    app.require_subcommand(0, 1);

    bool show_version = false;
    bool list_cases = false;
    app.add_flag("--version", show_version, "print version and exit");
    app.add_flag("--list-cases", list_cases, "list the built-in case ids and exit");

    auto* verify = app.add_subcommand("verify", "run case verification and emit a report");
    std::string case_id, format = "text", out_path;
    bool all = false;
    verify->add_option("--case", case_id, "built-in case id or path to a case file");
    verify->add_flag("--all", all, "verify all built-in cases");
    verify->add_option("--format", format, "report format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--out", out_path, "write the report to this path instead of standard output");

    auto* enumerate = app.add_subcommand("enumerate", "enumerate classes of fixed square on a lattice");
    std::string lattice_path;
    long long square = 0;
    std::optional<long long> deg_max;
    std::vector<std::string> constraints;
    std::string enum_format = "text", enum_out;
    enumerate->add_option("--lattice", lattice_path, "JSON lattice file")->required();
    enumerate->add_option("--square", square, "target self-intersection")->required();
    enumerate->add_option("--deg-max", deg_max,
                          "restrict to degrees 1..N against the file's polarization");
    enumerate->add_option("--constraint", constraints, "equality constraint CLASS=VALUE (repeatable)");
    enumerate->add_option("--format", enum_format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    enumerate->add_option("--out", enum_out, "write output to this path");

    auto* game = app.add_subcommand("game", "evaluate the two-ray game transform");
    int d = 6;
    long long kw3 = 0, kwb = 0, g = 0;
    std::string game_format = "text", game_out;
    game->add_option("--d", d, "fibration degree, 5 or 6")->required()->check(CLI::IsMember({5, 6}));
    game->add_option("--kw3", kw3, "(-K_W)^3")->required();
    game->add_option("--kwb", kwb, "(-K_W) . B")->required();
    game->add_option("--g", g, "genus of B")->required();
    game->add_option("--format", game_format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    game->add_option("--out", game_out, "write output to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (show_version) {
            std::cout << "dpfano " << kVersion << "\n";
            return 0;
        }
        if (list_cases) {
            for (const auto& id : dpfano::builtin_case_ids()) {
                const auto spec = dpfano::load_case(id);
                std::cout << id << ": " << spec.description << "\n";
            }
            return 0;
        }
        if (verify->parsed()) {
            if (all != case_id.empty())
                throw dpfano::SchemaError("verify needs exactly one of --case ID or --all");
            return run_verify(case_id, all, format, out_path);
        }
        if (enumerate->parsed())
            return run_enumerate(lattice_path, square, constraints, deg_max, enum_format, enum_out);
        if (game->parsed()) return run_game(d, kw3, kwb, g, game_format, game_out);
        std::cout << app.help();
        return 2;
    } catch (const dpfano::SchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
