#pragma once

// Declarative case specifications, the verification driver and report
// emission. A case file describes one construction (lattice or surface
// model, named classes, an ordered check list, the fibration transform
// input, the Hodge chain and the expected invariants) in JSON; the runner
// executes every check, compares exactly, and renders machine-readable
// reports. Check failures are report contents, never exceptions. Known
// discrepancies between the reference presentation and the computed values
// are first-class flags: they mark a case as "flagged" without failing it.

#include "dpfano/k3.hpp"
#include "dpfano/pipeline.hpp"
#include "dpfano/surfaces.hpp"

#include <json.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <optional>

namespace dpfano {

using Json = nlohmann::ordered_json;

// Malformed case files and unknown ops are schema errors; the CLI maps
// them to exit code 2.
class SchemaError : public std::runtime_error {
public:
    explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

// ---------------------------------------------------------------------------
// Case specification
// ---------------------------------------------------------------------------

enum class Construction { K3Lattice, DelPezzoSurface, RuledSurface, ProductSurface, Direct };

inline Construction parse_construction(const std::string& s) {
    if (s == "k3_lattice") return Construction::K3Lattice;
    if (s == "del_pezzo_surface") return Construction::DelPezzoSurface;
    if (s == "ruled_surface") return Construction::RuledSurface;
    if (s == "product_surface") return Construction::ProductSurface;
    if (s == "direct") return Construction::Direct;
    throw SchemaError("unknown construction '" + s + "'");
}

struct CheckStep {
    std::string op;
    Json args;
    Json expect;
    std::string anchor;
    std::string provides; // "kx3" when this step supplies the case invariant
};

struct CaseFlag {
    std::string id;
    std::string printed;
    std::string computed;
    std::string note;
};

struct ExpectedValues {
    std::optional<Int> kx3;
    std::optional<Int> kx_dot_c;
    std::optional<Rat> z;
    std::optional<Int> h12;
};

struct HodgeSpec {
    std::variant<std::string, Int> base;
    std::vector<HodgeStep> steps;
};

struct TableInfo {
    std::string table;      // "A" or "B"
    int dp_degree = 0;
    std::string target;     // the second extremal contraction / target
    std::string dx;         // description of D_X in terms of -K_X and F
};

struct CaseSpec {
    std::string id;
    std::string description;
    TableInfo table;
    Construction construction = Construction::Direct;

    // exactly one of these is populated for non-direct constructions
    std::optional<PolarizedK3Model> k3;
    std::optional<DelPezzoLattice> del_pezzo;
    std::optional<RuledSurfaceModel> ruled;
    std::optional<ProductSurfaceModel> product;

    std::map<std::string, DivisorClass> classes; // full resolution map incl. basis units
    std::vector<CheckStep> checks;
    std::optional<PipelineInput> pipeline;
    std::optional<HodgeSpec> hodge;
    ExpectedValues expected;
    std::vector<CaseFlag> flags;

    const LatticePtr& lattice() const {
        if (k3) return k3->lattice();
        if (del_pezzo) return del_pezzo->lattice;
        if (ruled) return ruled->lattice;
        if (product) return product->lattice;
        throw SchemaError("case '" + id + "': no lattice for this construction");
    }

    const DivisorClass* canonical() const {
        if (del_pezzo) return &del_pezzo->canonical;
        if (ruled) return &ruled->canonical;
        if (product) return &product->canonical;
        return nullptr; // K3: trivial canonical class
    }

    DivisorClass resolve(const Json& ref, const std::string& where) const {
        if (ref.is_string()) {
            auto it = classes.find(ref.get<std::string>());
            if (it == classes.end())
                throw SchemaError("case '" + id + "', " + where + ": unknown class name '" +
                                  ref.get<std::string>() + "'");
            return it->second;
        }
        if (ref.is_array()) {
            IntVec coords;
            for (const auto& v : ref) coords.push_back(Int(v.get<long long>()));
            return DivisorClass(lattice(), std::move(coords));
        }
        throw SchemaError("case '" + id + "', " + where + ": expected class name or coordinates");
    }
};

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace caseio {

inline Int json_int(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw SchemaError(where + ": expected integer");
}

inline Json int_json(const Int& v) {
    static const Int lo = Int(std::numeric_limits<long long>::min());
    static const Int hi = Int(std::numeric_limits<long long>::max());
    if (v >= lo && v <= hi) return Json(v.convert_to<long long>());
    return Json(v.str());
}

// Rationals round-trip as "p/q" strings; integers as plain numbers.
inline Json rat_json(const Rat& v) {
    if (is_integer(v)) return int_json(num(v));
    return Json(rat_str(v));
}

inline Rat json_rat(const Json& j, const std::string& where) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_string()) return parse_rat(j.get<std::string>());
    throw SchemaError(where + ": expected integer or 'p/q' string");
}

inline IntVec json_coords(const Json& j, const std::string& where) {
    if (!j.is_array()) throw SchemaError(where + ": expected coordinate array");
    IntVec out;
    for (const auto& v : j) out.push_back(json_int(v, where));
    return out;
}

inline Json coords_json(const IntVec& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(int_json(x));
    return out;
}

inline Json classes_json(const std::vector<DivisorClass>& cs) {
    Json out = Json::array();
    for (const auto& c : cs) out.push_back(coords_json(c.coords));
    return out;
}

inline LatticePtr parse_lattice(const Json& j, const std::string& label) {
    if (!j.contains("basis") || !j.contains("gram"))
        throw SchemaError("case '" + label + "': lattice needs 'basis' and 'gram'");
    std::vector<std::string> basis = j.at("basis").get<std::vector<std::string>>();
    IntMat gram;
    for (const auto& row : j.at("gram")) gram.push_back(json_coords(row, "gram row"));
    try {
        return make_lattice(label, std::move(basis), std::move(gram));
    } catch (const std::invalid_argument& e) {
        throw SchemaError(std::string("case '") + label + "': " + e.what());
    }
}

} // namespace caseio

inline CaseSpec load_case_json(const Json& j) {
    using namespace caseio;
    CaseSpec spec;
    if (!j.contains("id")) throw SchemaError("case file: missing 'id'");
    spec.id = j.at("id").get<std::string>();
    spec.description = j.value("description", "");
    if (j.contains("table")) {
        const Json& t = j.at("table");
        spec.table.table = t.value("table", "");
        spec.table.dp_degree = t.value("dp_degree", 0);
        spec.table.target = t.value("target", "");
        spec.table.dx = t.value("dx", "");
    }
    if (!j.contains("construction")) throw SchemaError("case '" + spec.id + "': missing 'construction'");
    spec.construction = parse_construction(j.at("construction").get<std::string>());

    // build the model and the basis-unit classes
    LatticePtr lattice;
    switch (spec.construction) {
        case Construction::K3Lattice: {
            if (!j.contains("lattice")) throw SchemaError("case '" + spec.id + "': missing 'lattice'");
            lattice = parse_lattice(j.at("lattice"), spec.id);
            break;
        }
        case Construction::DelPezzoSurface: {
            if (!j.contains("n")) throw SchemaError("case '" + spec.id + "': missing 'n'");
            spec.del_pezzo = make_del_pezzo(j.at("n").get<int>());
            lattice = spec.del_pezzo->lattice;
            break;
        }
        case Construction::RuledSurface: {
            std::map<std::string, IntVec> restr;
            if (j.contains("restrictions"))
                for (const auto& [name, coords] : j.at("restrictions").items())
                    restr[name] = json_coords(coords, "restriction '" + name + "'");
            spec.ruled = make_ruled_surface(json_int(j.at("base_genus"), "base_genus"),
                                            json_int(j.at("e"), "e"), std::move(restr));
            lattice = spec.ruled->lattice;
            break;
        }
        case Construction::ProductSurface: {
            spec.product = make_product_surface(json_int(j.at("base_genus"), "base_genus"));
            lattice = spec.product->lattice;
            break;
        }
        case Construction::Direct:
            break;
    }

    if (lattice) {
        for (int i = 0; i < lattice->rank(); ++i) {
            IntVec unit(lattice->rank(), 0);
            unit[i] = 1;
            spec.classes.emplace(lattice->basis()[i], DivisorClass(lattice, std::move(unit)));
        }
        if (j.contains("classes"))
            for (const auto& [name, coords] : j.at("classes").items()) {
                try {
                    spec.classes.insert_or_assign(name,
                                                  DivisorClass(lattice, json_coords(coords, name)));
                } catch (const std::invalid_argument& e) {
                    throw SchemaError("case '" + spec.id + "', class '" + name + "': " + e.what());
                }
            }
        if (spec.ruled)
            for (const auto& [name, cls] : spec.ruled->restrictions) spec.classes.emplace(name, cls);
        if (const DivisorClass* k = spec.canonical()) spec.classes.emplace("K", *k);
    } else if (j.contains("classes") || j.contains("lattice")) {
        throw SchemaError("case '" + spec.id + "': direct construction carries no lattice data");
    }

    if (spec.construction == Construction::K3Lattice) {
        if (!j.contains("polarization"))
            throw SchemaError("case '" + spec.id + "': missing 'polarization'");
        const std::string hname = j.at("polarization").get<std::string>();
        auto it = spec.classes.find(hname);
        if (it == spec.classes.end())
            throw SchemaError("case '" + spec.id + "': polarization '" + hname + "' is not a class");
        std::set<std::string> marks;
        if (j.contains("marks"))
            for (const auto& m : j.at("marks")) {
                const std::string name = m.get<std::string>();
                if (!spec.classes.count(name))
                    throw SchemaError("case '" + spec.id + "': mark '" + name + "' is not a class");
                marks.insert(name);
            }
        std::map<std::string, DivisorClass> named(spec.classes.begin(), spec.classes.end());
        try {
            spec.k3.emplace(lattice, it->second, std::move(named), std::move(marks));
        } catch (const std::invalid_argument& e) {
            throw SchemaError("case '" + spec.id + "': " + e.what());
        }
    }

    static const std::set<std::string> known_ops = {
        "classify", "pairing", "combine", "enumerate", "minus_two_up_to", "h0",
        "effective_candidate", "bpf", "very_ample", "quadric_embedding", "nef", "movable",
        "bn_general", "relative_nef", "minus_one_count", "dp_nef", "genus", "restrict",
        "blowup_invariants", "h0_bidegree", "quadric_pencil"};
    auto check_bound = [&spec](const Json& ref, const std::string& where) {
        if (ref.is_string() && !spec.classes.count(ref.get<std::string>()))
            throw SchemaError("case '" + spec.id + "', " + where + ": unbound class name '" +
                              ref.get<std::string>() + "'");
    };
    if (j.contains("checks"))
        for (const auto& cj : j.at("checks")) {
            CheckStep step;
            if (!cj.contains("op")) throw SchemaError("case '" + spec.id + "': check without 'op'");
            step.op = cj.at("op").get<std::string>();
            if (!known_ops.count(step.op))
                throw SchemaError("case '" + spec.id + "': unknown op '" + step.op + "'");
            step.args = cj.value("args", Json::object());
            for (const char* key : {"a", "b", "cls", "lrestr", "ffib"})
                if (step.args.contains(key)) check_bound(step.args.at(key), step.op);
            if (step.args.contains("eq"))
                for (const auto& c : step.args.at("eq"))
                    if (c.contains("cls")) check_bound(c.at("cls"), step.op);
            if (step.op == "combine" && step.args.contains("expr"))
                for (const auto& item : step.args.at("expr").items())
                    check_bound(Json(item.key()), step.op);
            if (!cj.contains("expect"))
                throw SchemaError("case '" + spec.id + "': check '" + step.op + "' without 'expect'");
            step.expect = cj.at("expect");
            step.anchor = cj.value("anchor", "");
            step.provides = cj.value("provides", "");
            spec.checks.push_back(std::move(step));
        }

    if (j.contains("pipeline")) {
        const Json& p = j.at("pipeline");
        PipelineInput in;
        in.kw3 = json_int(p.at("kw3"), "pipeline.kw3");
        in.kw_dot_b = json_int(p.at("kw_dot_b"), "pipeline.kw_dot_b");
        in.g_b = json_int(p.at("g_b"), "pipeline.g_b");
        in.d = p.at("d").get<int>();
        if (in.d != 5 && in.d != 6)
            throw SchemaError("case '" + spec.id + "': pipeline degree must be 5 or 6");
        if (in.g_b < 0) throw SchemaError("case '" + spec.id + "': pipeline genus must be >= 0");
        if (in.d == 5 && in.kw3 != 54)
            throw SchemaError("case '" + spec.id + "': degree-5 pipeline requires kw3 = 54");
        spec.pipeline = in;
    }

    if (j.contains("hodge")) {
        const Json& h = j.at("hodge");
        HodgeSpec hs;
        const Json& base = h.at("base");
        if (base.is_string()) {
            const std::string name = base.get<std::string>();
            if (!h12_base_table().count(name))
                throw SchemaError("case '" + spec.id + "': unknown Hodge base '" + name + "'");
            hs.base = name;
        } else {
            hs.base = json_int(base, "hodge.base");
        }
        for (const auto& s : h.at("steps")) {
            if (s.is_string() && s.get<std::string>() == "flop") {
                hs.steps.push_back(FlopStep{});
            } else if (s.is_object() && s.contains("blowup")) {
                hs.steps.push_back(BlowupStep{json_int(s.at("blowup"), "blowup genus")});
            } else if (s.is_object() && s.contains("blowdown")) {
                hs.steps.push_back(BlowdownStep{json_int(s.at("blowdown"), "blowdown genus")});
            } else {
                throw SchemaError("case '" + spec.id + "': malformed Hodge step");
            }
        }
        spec.hodge = std::move(hs);
    }

    if (j.contains("expected")) {
        const Json& e = j.at("expected");
        if (e.contains("kx3")) spec.expected.kx3 = json_int(e.at("kx3"), "expected.kx3");
        if (e.contains("kx_dot_c")) spec.expected.kx_dot_c = json_int(e.at("kx_dot_c"), "expected.kx_dot_c");
        if (e.contains("z")) spec.expected.z = json_rat(e.at("z"), "expected.z");
        if (e.contains("h12")) spec.expected.h12 = json_int(e.at("h12"), "expected.h12");
    }

    if (j.contains("flags"))
        for (const auto& f : j.at("flags")) {
            CaseFlag flag;
            flag.id = f.at("id").get<std::string>();
            flag.printed = f.value("printed", "");
            flag.computed = f.value("computed", "");
            flag.note = f.value("note", "");
            spec.flags.push_back(std::move(flag));
        }

    return spec;
}

// Defined in cases_data.hpp: the ten built-in case documents.
const std::vector<std::pair<std::string, const char*>>& builtin_case_texts();

inline std::vector<std::string> builtin_case_ids() {
    std::vector<std::string> out;
    for (const auto& [id, text] : builtin_case_texts()) out.push_back(id);
    return out;
}

inline CaseSpec load_case(const std::string& id_or_path) {
    for (const auto& [id, text] : builtin_case_texts())
        if (id == id_or_path) {
            try {
                return load_case_json(Json::parse(text));
            } catch (const Json::exception& e) {
                throw SchemaError("builtin case '" + id + "': " + e.what());
            }
        }
    std::ifstream in(id_or_path);
    if (!in) throw SchemaError("no builtin case and no readable file named '" + id_or_path + "'");
    try {
        Json j;
        in >> j;
        return load_case_json(j);
    } catch (const Json::exception& e) {
        throw SchemaError("case file '" + id_or_path + "': " + e.what());
    }
}

// ---------------------------------------------------------------------------
// Step execution
// ---------------------------------------------------------------------------

struct StepResult {
    std::string op;
    Json args;
    Json got;
    Json expect;
    bool pass = false;
    std::string anchor;
    std::string error; // populated when the op itself could not run
};

enum class CaseStatus { Pass, Flagged, Fail };

inline std::string status_str(CaseStatus s) {
    switch (s) {
        case CaseStatus::Pass: return "pass";
        case CaseStatus::Flagged: return "flagged";
        case CaseStatus::Fail: return "fail";
    }
    return "?";
}

struct VerificationReport {
    std::string id;
    CaseStatus status = CaseStatus::Fail;
    TableInfo table;
    std::vector<StepResult> steps;
    Json invariants = Json::object(); // kx3, kx_dot_c, z, h12 as computed
    std::vector<CaseFlag> flags;
    long long timing_ms = 0;
};

namespace detail {

// expect acts as a pattern: objects match key-by-key on the keys they
// mention, everything else must be equal exactly.
inline bool matches(const Json& got, const Json& expect) {
    if (expect.is_object()) {
        if (!got.is_object()) return false;
        for (const auto& [key, val] : expect.items()) {
            if (!got.contains(key)) return false;
            if (!matches(got.at(key), val)) return false;
        }
        return true;
    }
    return got == expect;
}

inline const PolarizedK3Model& need_k3(const CaseSpec& spec, const std::string& op) {
    if (!spec.k3) throw SchemaError("case '" + spec.id + "': op '" + op + "' needs a K3 lattice model");
    return *spec.k3;
}

inline std::vector<EqualityConstraint> parse_constraints(const CaseSpec& spec, const Json& args) {
    std::vector<EqualityConstraint> eq;
    if (args.contains("eq"))
        for (const auto& c : args.at("eq"))
            eq.push_back({spec.resolve(c.at("cls"), "eq constraint"),
                          caseio::json_int(c.at("value"), "eq value")});
    if (args.contains("degree")) {
        const auto& model = need_k3(spec, "enumerate");
        eq.push_back({model.polarization(), caseio::json_int(args.at("degree"), "degree")});
    }
    return eq;
}

// One registry entry per op: computes the 'got' document.
inline Json run_op(const CaseSpec& spec, const CheckStep& step) {
    using namespace caseio;
    const std::string& op = step.op;
    const Json& args = step.args;

    if (op == "classify") {
        const auto c = classify(*spec.lattice());
        return Json{{"even", c.is_even},
                    {"signature", Json::array({c.signature.positives, c.signature.negatives,
                                               c.signature.zeros})}};
    }
    if (op == "pairing") {
        return int_json(pairing(spec.resolve(args.at("a"), op), spec.resolve(args.at("b"), op)));
    }
    if (op == "combine") {
        DivisorClass acc(spec.lattice(), IntVec(spec.lattice()->rank(), 0));
        for (const auto& [name, coeff] : args.at("expr").items())
            acc = acc + json_int(coeff, "combine coefficient") * spec.resolve(Json(name), op);
        return coords_json(acc.coords);
    }
    if (op == "enumerate") {
        const Int square = json_int(args.at("square"), "square");
        return classes_json(enum_classes(spec.lattice(), square, parse_constraints(spec, args)));
    }
    if (op == "minus_two_up_to") {
        const auto& model = need_k3(spec, op);
        return classes_json(minus_two_up_to(model, json_int(args.at("max"), "max")));
    }
    if (op == "h0") {
        return int_json(h0_rr(need_k3(spec, op), spec.resolve(args.at("cls"), op)));
    }
    if (op == "effective_candidate") {
        return Json(effective_candidate(need_k3(spec, op), spec.resolve(args.at("cls"), op)));
    }
    if (op == "bpf") {
        const auto r = bpf_check(need_k3(spec, op), spec.resolve(args.at("cls"), op));
        return Json{{"pass", r.pass}, {"route", r.route}, {"witnesses", classes_json(r.witnesses)}};
    }
    if (op == "very_ample") {
        const auto r = very_ample_check(need_k3(spec, op), spec.resolve(args.at("cls"), op));
        Json w = Json::array();
        for (const auto& x : r.witnesses)
            w.push_back(Json{{"cls", coords_json(x.cls.coords)}, {"clause", clause_str(x.clause)}});
        return Json{{"pass", r.pass}, {"witnesses", std::move(w)}};
    }
    if (op == "quadric_embedding") {
        const auto r = quadric_embedding_check(need_k3(spec, op));
        return Json{{"pass", r.pass}, {"witnesses", classes_json(r.witnesses)}};
    }
    if (op == "nef") {
        const auto r = nef_check(need_k3(spec, op), spec.resolve(args.at("cls"), op));
        return Json{{"nef", r.nef},
                    {"violators", classes_json(r.violators)},
                    {"checked", classes_json(r.checked)}};
    }
    if (op == "movable") {
        const auto r = movable_check(need_k3(spec, op), spec.resolve(args.at("cls"), op));
        Json feas = Json::array();
        for (const auto& v : r.feasible) feas.push_back(coords_json(v));
        return Json{{"movable", r.movable},
                    {"fixed_candidates", classes_json(r.fixed_candidates)},
                    {"feasible", std::move(feas)}};
    }
    if (op == "bn_general") {
        const auto r = bn_general_check(need_k3(spec, op));
        Json cands = Json::array(), split = Json::array();
        for (const auto& c : r.candidates) {
            cands.push_back(coords_json(c.l.coords));
            split.push_back(Json{{"l", coords_json(c.l.coords)},
                                 {"n", coords_json(c.n.coords)},
                                 {"h0_l", int_json(c.h0_l)},
                                 {"h0_n", int_json(c.h0_n)}});
        }
        return Json{{"pass", r.pass}, {"h0_h", int_json(r.h0_h)},
                    {"candidates", std::move(cands)}, {"splittings", std::move(split)}};
    }
    if (op == "relative_nef") {
        const auto r = relative_nef_check(need_k3(spec, op), spec.resolve(args.at("lrestr"), op),
                                          spec.resolve(args.at("ffib"), op));
        Json w = Json::array();
        for (const auto& x : r.witnesses)
            w.push_back(Json{{"cls", coords_json(x.cls.coords)},
                             {"fiber_degree", int_json(x.fiber_degree)}});
        return Json{{"pass", r.pass}, {"witnesses", std::move(w)},
                    {"degree_bound", int_json(r.degree_bound)}};
    }
    if (op == "minus_one_count") {
        if (!spec.del_pezzo) throw SchemaError("case '" + spec.id + "': op needs a del Pezzo lattice");
        return int_json(Int(minus_one_classes(*spec.del_pezzo).size()));
    }
    if (op == "dp_nef") {
        if (!spec.del_pezzo) throw SchemaError("case '" + spec.id + "': op needs a del Pezzo lattice");
        const auto r = nef_on_del_pezzo(*spec.del_pezzo, spec.resolve(args.at("cls"), op));
        return Json{{"nef", r.nef}, {"violators", classes_json(r.violators)},
                    {"lines", static_cast<long long>(r.lines.size())}};
    }
    if (op == "genus") {
        const DivisorClass b = spec.resolve(args.at("cls"), op);
        DivisorClass k = spec.canonical() ? *spec.canonical()
                                          : DivisorClass(spec.lattice(), IntVec(spec.lattice()->rank(), 0));
        return int_json(adjunction_genus(k, b));
    }
    if (op == "restrict") {
        if (!spec.ruled) throw SchemaError("case '" + spec.id + "': op needs a ruled surface model");
        std::vector<std::pair<std::string, Int>> expr;
        for (const auto& [name, coeff] : args.at("expr").items())
            expr.emplace_back(name, json_int(coeff, "restrict coefficient"));
        return coords_json(restricted_class(*spec.ruled, expr).coords);
    }
    if (op == "blowup_invariants") {
        const auto r = blowup_curve_invariants(json_int(args.at("kv3"), "kv3"),
                                               json_int(args.at("kv_dot_b"), "kv_dot_b"),
                                               json_int(args.at("g"), "g"));
        return Json{{"kx3", int_json(r.kx3)}, {"k2e", int_json(r.k2e)},
                    {"ke2", int_json(r.ke2)}, {"e3", int_json(r.e3)}};
    }
    if (op == "h0_bidegree") {
        return int_json(h0_bidegree(json_int(args.at("a"), "a"), json_int(args.at("b"), "b"),
                                    json_int(args.at("m"), "m"), json_int(args.at("n"), "n")));
    }
    if (op == "quadric_pencil") {
        const auto r = quadric_pencil_h12(json_int(args.at("size"), "size"),
                                          json_int(args.at("degree"), "degree"));
        return Json{{"delta", int_json(r.delta)}, {"euler", int_json(r.euler)},
                    {"b3", int_json(r.b3)}, {"h12", int_json(r.h12)}};
    }
    throw SchemaError("case '" + spec.id + "': unknown op '" + op + "'");
}

} // namespace detail

// ---------------------------------------------------------------------------
// Case runner
// ---------------------------------------------------------------------------

inline VerificationReport run_case(const CaseSpec& spec) {
    const auto t0 = std::chrono::steady_clock::now();
    VerificationReport report;
    report.id = spec.id;
    report.table = spec.table;
    report.flags = spec.flags;

    bool all_pass = true;
    std::optional<Int> provided_kx3;

    for (const auto& step : spec.checks) {
        StepResult r;
        r.op = step.op;
        r.args = step.args;
        r.expect = step.expect;
        r.anchor = step.anchor;
        try {
            r.got = detail::run_op(spec, step);
            r.pass = detail::matches(r.got, r.expect);
            if (r.pass && step.provides == "kx3")
                provided_kx3 = caseio::json_int(r.got.at("kx3"), "provided kx3");
        } catch (const std::exception& e) {
            r.pass = false;
            r.error = e.what();
        }
        all_pass = all_pass && r.pass;
        report.steps.push_back(std::move(r));
    }

    // fibration transform
    if (spec.pipeline) {
        StepResult r;
        r.op = "game";
        r.args = Json{{"kw3", caseio::int_json(spec.pipeline->kw3)},
                      {"kw_dot_b", caseio::int_json(spec.pipeline->kw_dot_b)},
                      {"g_b", caseio::int_json(spec.pipeline->g_b)},
                      {"d", spec.pipeline->d}};
        try {
            const GameResult g = dpd_transform(*spec.pipeline);
            r.got = Json{{"kx3", caseio::rat_json(g.kx3)},
                         {"kx_dot_c", caseio::rat_json(g.kx_dot_c)},
                         {"z", caseio::rat_json(g.z)}};
            bool ok = is_integer(g.kx3) && is_integer(g.kx_dot_c) &&
                      is_integer(Rat(spec.pipeline->d == 6 ? 2 : 3) * g.z);
            Json expect = Json::object();
            if (spec.expected.kx3) {
                expect["kx3"] = caseio::int_json(*spec.expected.kx3);
                ok = ok && g.kx3 == Rat(*spec.expected.kx3);
            }
            if (spec.expected.kx_dot_c) {
                expect["kx_dot_c"] = caseio::int_json(*spec.expected.kx_dot_c);
                ok = ok && g.kx_dot_c == Rat(*spec.expected.kx_dot_c);
            }
            if (spec.expected.z) {
                expect["z"] = caseio::rat_json(*spec.expected.z);
                ok = ok && g.z == *spec.expected.z;
            }
            r.expect = std::move(expect);
            r.anchor = "two-ray game invariants against the expected table row";
            r.pass = ok;
            report.invariants["kx3"] = caseio::rat_json(g.kx3);
            report.invariants["kx_dot_c"] = caseio::rat_json(g.kx_dot_c);
            report.invariants["z"] = caseio::rat_json(g.z);
        } catch (const std::exception& e) {
            r.pass = false;
            r.error = e.what();
        }
        all_pass = all_pass && r.pass;
        report.steps.push_back(std::move(r));
    } else if (spec.expected.kx3) {
        // no transform: the anticanonical degree must come from a check step
        StepResult r;
        r.op = "anticanonical-degree";
        r.expect = Json{{"kx3", caseio::int_json(*spec.expected.kx3)}};
        if (provided_kx3) {
            r.got = Json{{"kx3", caseio::int_json(*provided_kx3)}};
            r.pass = *provided_kx3 == *spec.expected.kx3;
            report.invariants["kx3"] = caseio::int_json(*provided_kx3);
        } else {
            r.pass = false;
            r.error = "expected kx3 has no providing check step";
        }
        r.anchor = "anticanonical degree against the expected table row";
        all_pass = all_pass && r.pass;
        report.steps.push_back(std::move(r));
    }

    // Hodge chain
    if (spec.hodge) {
        StepResult r;
        r.op = "hodge-chain";
        try {
            const HodgeRecord h = h12_chain(spec.hodge->base, spec.hodge->steps);
            Json prov = Json::array();
            for (const auto& p : h.provenance) prov.push_back(p);
            r.got = Json{{"h12", caseio::int_json(h.value)}, {"provenance", std::move(prov)}};
            bool ok = true;
            if (spec.expected.h12) {
                r.expect = Json{{"h12", caseio::int_json(*spec.expected.h12)}};
                ok = h.value == *spec.expected.h12;
            }
            r.pass = ok;
            r.anchor = "flop invariance and blow-up additivity of h^{1,2}";
            report.invariants["h12"] = caseio::int_json(h.value);
        } catch (const std::exception& e) {
            r.pass = false;
            r.error = e.what();
        }
        all_pass = all_pass && r.pass;
        report.steps.push_back(std::move(r));
    } else if (spec.expected.h12) {
        StepResult r;
        r.op = "hodge-chain";
        r.pass = false;
        r.error = "expected h12 has no Hodge chain";
        all_pass = false;
        report.steps.push_back(std::move(r));
    }

    report.status = !all_pass ? CaseStatus::Fail
                              : (spec.flags.empty() ? CaseStatus::Pass : CaseStatus::Flagged);
    report.timing_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
    return report;
}

struct RunSummary {
    int pass = 0;
    int flagged = 0;
    int fail = 0;
    std::vector<std::pair<std::string, std::string>> fired_flags; // (case, flag id)
    bool ok() const { return fail == 0; }
};

inline RunSummary summarize(const std::vector<VerificationReport>& reports) {
    RunSummary s;
    for (const auto& r : reports) {
        switch (r.status) {
            case CaseStatus::Pass: ++s.pass; break;
            case CaseStatus::Flagged: ++s.flagged; break;
            case CaseStatus::Fail: ++s.fail; break;
        }
        if (r.status != CaseStatus::Fail)
            for (const auto& f : r.flags) s.fired_flags.emplace_back(r.id, f.id);
    }
    return s;
}

inline std::vector<VerificationReport> run_all() {
    std::vector<VerificationReport> reports;
    for (const auto& id : builtin_case_ids()) reports.push_back(run_case(load_case(id)));
    return reports;
}

// ---------------------------------------------------------------------------
// Report emission
// ---------------------------------------------------------------------------

inline Json report_json(const VerificationReport& r) {
    Json steps = Json::array();
    for (const auto& s : r.steps) {
        Json sj = Json::object();
        sj["op"] = s.op;
        if (!s.args.empty()) sj["args"] = s.args;
        if (!s.got.is_null()) sj["got"] = s.got;
        if (!s.expect.is_null()) sj["expect"] = s.expect;
        sj["pass"] = s.pass;
        if (!s.anchor.empty()) sj["anchor"] = s.anchor;
        if (!s.error.empty()) sj["error"] = s.error;
        steps.push_back(std::move(sj));
    }
    Json flags = Json::array();
    for (const auto& f : r.flags)
        flags.push_back(Json{{"id", f.id}, {"printed", f.printed},
                             {"computed", f.computed}, {"note", f.note}});
    return Json{{"id", r.id},
                {"status", status_str(r.status)},
                {"table", Json{{"table", r.table.table}, {"dp_degree", r.table.dp_degree},
                               {"target", r.table.target}, {"dx", r.table.dx}}},
                {"invariants", r.invariants},
                {"steps", std::move(steps)},
                {"flags", std::move(flags)},
                {"timing_ms", r.timing_ms}};
}

inline Json reports_json(const std::vector<VerificationReport>& reports) {
    const RunSummary s = summarize(reports);
    Json cases = Json::array();
    for (const auto& r : reports) cases.push_back(report_json(r));
    Json fired = Json::array();
    for (const auto& [case_id, flag_id] : s.fired_flags)
        fired.push_back(Json{{"case", case_id}, {"flag", flag_id}});
    return Json{{"cases", std::move(cases)},
                {"summary", Json{{"total", static_cast<int>(reports.size())},
                                 {"pass", s.pass},
                                 {"flagged", s.flagged},
                                 {"fail", s.fail},
                                 {"fired_flags", std::move(fired)}}}};
}

inline std::string emit_json(const std::vector<VerificationReport>& reports) {
    return reports_json(reports).dump(2) + "\n";
}

inline std::string emit_text(const std::vector<VerificationReport>& reports) {
    std::ostringstream os;
    for (const auto& r : reports) {
        os << "case " << r.id << ": " << status_str(r.status) << "\n";
        for (const auto& s : r.steps) {
            os << "  [" << (s.pass ? "ok" : "FAIL") << "] " << s.op;
            if (!s.args.empty()) os << " " << s.args.dump();
            if (!s.got.is_null()) os << " -> " << s.got.dump();
            if (!s.pass && !s.expect.is_null()) os << " (expected " << s.expect.dump() << ")";
            if (!s.error.empty()) os << " (error: " << s.error << ")";
            if (!s.anchor.empty()) os << "  # " << s.anchor;
            os << "\n";
        }
        for (const auto& f : r.flags)
            os << "  [flag] " << f.id << ": printed " << f.printed << ", computed " << f.computed
               << (f.note.empty() ? "" : " (" + f.note + ")") << "\n";
    }

    auto pad = [](const std::string& s, std::size_t w) {
        return s + std::string(s.size() < w ? w - s.size() : 1, ' ');
    };
    auto cell = [](const Json& inv, const char* key) -> std::string {
        if (!inv.contains(key)) return "-";
        const Json& v = inv.at(key);
        return v.is_string() ? v.get<std::string>() : v.dump();
    };
    os << "\n" << pad("Name", 10) << pad("dP", 4) << pad("(-K_X)^3", 10) << pad("D_X", 14)
       << pad("h^{1,2}", 9) << "status\n";
    for (const auto& r : reports)
        os << pad(r.id, 10) << pad(std::to_string(r.table.dp_degree), 4)
           << pad(cell(r.invariants, "kx3"), 10) << pad(r.table.dx, 14)
           << pad(cell(r.invariants, "h12"), 9) << status_str(r.status) << "\n";
    const RunSummary s = summarize(reports);
    os << "\nsummary: " << reports.size() << " cases, " << s.pass << " pass, " << s.flagged
       << " flagged, " << s.fail << " fail\n";
    for (const auto& [case_id, flag_id] : s.fired_flags)
        os << "  flagged: " << case_id << " (" << flag_id << ")\n";
    return os.str();
}

inline void emit_report(const std::vector<VerificationReport>& reports, const std::string& format,
                        std::ostream& out) {
    if (format == "json") out << emit_json(reports);
    else if (format == "text") out << emit_text(reports);
    else throw SchemaError("unknown report format '" + format + "'");
}

} // namespace dpfano

#include "dpfano/cases_data.hpp"
