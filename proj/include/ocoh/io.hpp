#pragma once

#include "ocoh/deformation.hpp"
#include "ocoh/dendriform.hpp"

#include "json.hpp"

#include <set>
#include <sstream>
#include <string>

namespace ocoh::io {

using Json = nlohmann::ordered_json;

struct DeformationBlock {
    int order = 0;
    std::vector<LinOp> T1s, T2s;
    std::optional<std::vector<BilinearMap>> mus, ls, rs;

    bool is_full() const { return mus.has_value() || ls.has_value() || rs.has_value(); }
};

/// One self-describing document: every command reads the blocks it needs.
struct WorkspaceDocument {
    std::optional<Algebra> algebra;
    std::optional<Bimodule> bimodule;
    std::optional<LinOp> T1, T2;
    std::optional<CompatibleDendriform> dendriform;
    std::optional<DeformationBlock> deformation;
    std::optional<TwoTensor> r1, r2;
    std::vector<std::string> warnings;

    OContext context() const {
        if (!algebra) throw std::invalid_argument("workspace has no algebra block");
        if (!bimodule) throw std::invalid_argument("workspace has no bimodule block");
        return make_context(*algebra, *bimodule);
    }

    OperatorPair pair() const {
        if (!T1 || !T2) throw std::invalid_argument("workspace needs both T1 and T2");
        return OperatorPair{*T1, *T2};
    }
};

namespace detail {

[[noreturn]] inline void fail(const std::string& path, const std::string& what) {
    throw std::invalid_argument("schema error at " + path + ": " + what);
}

inline Rational parse_scalar(const Json& j, const std::string& path) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    if (!j.is_string()) fail(path, "expected a rational string like \"p/q\"");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        fail(path, e.what());
    }
}

inline BilinearMap parse_tensor3(const Json& j, int d1, int d2, int dout, const std::string& path) {
    if (!j.is_array() || static_cast<int>(j.size()) != d1) fail(path, "expected an array of length " + std::to_string(d1));
    BilinearMap b(d1, d2, dout);
    for (int i = 0; i < d1; ++i) {
        const Json& row = j[static_cast<size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != d2)
            fail(path + "[" + std::to_string(i) + "]", "expected an array of length " + std::to_string(d2));
        for (int k = 0; k < d2; ++k) {
            const Json& cell = row[static_cast<size_t>(k)];
            if (!cell.is_array() || static_cast<int>(cell.size()) != dout)
                fail(path + "[" + std::to_string(i) + "][" + std::to_string(k) + "]",
                     "expected an array of length " + std::to_string(dout));
            for (int w = 0; w < dout; ++w)
                b.at(i, k, w) = parse_scalar(cell[static_cast<size_t>(w)], path + "[" + std::to_string(i) + "][" +
                                                                               std::to_string(k) + "][" +
                                                                               std::to_string(w) + "]");
        }
    }
    return b;
}

inline LinOp parse_operator(const Json& j, int alg_dim, int mod_dim, const std::string& path) {
    if (!j.is_array() || static_cast<int>(j.size()) != alg_dim)
        fail(path, "expected " + std::to_string(alg_dim) + " rows");
    LinOp t(alg_dim, mod_dim);
    for (int a = 0; a < alg_dim; ++a) {
        const Json& row = j[static_cast<size_t>(a)];
        if (!row.is_array() || static_cast<int>(row.size()) != mod_dim)
            fail(path + "[" + std::to_string(a) + "]", "expected " + std::to_string(mod_dim) + " columns");
        for (int u = 0; u < mod_dim; ++u)
            t.at(a, u) = parse_scalar(row[static_cast<size_t>(u)],
                                      path + "[" + std::to_string(a) + "][" + std::to_string(u) + "]");
    }
    return t;
}

inline void note_unknown_keys(const Json& obj, const std::set<std::string>& allowed, const std::string& path,
                              std::vector<std::string>& warnings) {
    for (const auto& [key, value] : obj.items())
        if (!allowed.count(key)) warnings.push_back("unknown key " + path + "." + key);
}

inline Json scalar_json(const Rational& r) { return Json(r.str()); }

inline Json tensor3_json(const BilinearMap& b) {
    Json out = Json::array();
    for (int i = 0; i < b.d1; ++i) {
        Json row = Json::array();
        for (int j = 0; j < b.d2; ++j) {
            Json cell = Json::array();
            for (int k = 0; k < b.dout; ++k) cell.push_back(scalar_json(b.at(i, j, k)));
            row.push_back(std::move(cell));
        }
        out.push_back(std::move(row));
    }
    return out;
}

inline Json operator_json(const LinOp& t) {
    Json out = Json::array();
    for (int a = 0; a < t.alg_dim; ++a) {
        Json row = Json::array();
        for (int u = 0; u < t.mod_dim; ++u) row.push_back(scalar_json(t.at(a, u)));
        out.push_back(std::move(row));
    }
    return out;
}

inline Json nested_coeffs(const MLMap& f, int k, int depth, size_t base, size_t stride) {
    if (depth == f.arity) return scalar_json(f.at(k, base));
    Json out = Json::array();
    const size_t next = stride / static_cast<size_t>(f.in_dim);
    for (int u = 0; u < f.in_dim; ++u)
        out.push_back(nested_coeffs(f, k, depth + 1, base + static_cast<size_t>(u) * next, next));
    return out;
}

} // namespace detail

/// {"arity": n, "coeffs": [...]} with coeffs nested output-major.
inline Json mmap_json(const MLMap& f) {
    Json out = Json::object();
    out["arity"] = f.arity;
    Json coeffs = Json::array();
    for (int k = 0; k < f.out_dim; ++k) coeffs.push_back(detail::nested_coeffs(f, k, 0, 0, f.input_count()));
    out["coeffs"] = coeffs;
    return out;
}

/// {"degree": n, "parts": [mmap...]}.
inline Json tuple_json(const TupleCochain& x) {
    Json out = Json::object();
    out["degree"] = x.degree;
    Json parts = Json::array();
    for (const auto& p : x.parts) parts.push_back(mmap_json(p));
    out["parts"] = parts;
    return out;
}

/// Mirrors the three-part cochain shape of the cOA complex.
inline Json coa_json(const OContext& ctx, const COACochain& x) {
    Json out = Json::object();
    out["degree"] = x.coh_degree;
    Json blocks = Json::array();
    MixedMap v = x.elt.vprime ? *x.elt.vprime : MixedMap(x.coh_degree, ctx.dim_a(), ctx.dim_m());
    for (const auto& [key, blk] : v.comps) {
        Json b = Json::object();
        b["target"] = key.first == Sp::A ? "A" : "M";
        std::string word;
        for (Sp s : key.second) word += s == Sp::A ? 'A' : 'M';
        b["word"] = word;
        Json coeffs = Json::array();
        for (const auto& c : blk) coeffs.push_back(detail::scalar_json(c));
        b["coeffs"] = coeffs;
        blocks.push_back(std::move(b));
    }
    out["structure_blocks"] = blocks;
    Json ops = Json::array();
    for (const auto& p : x.elt.a_parts) ops.push_back(mmap_json(p));
    out["operator_parts"] = ops;
    return out;
}

/// Canonical JSON for a parsed document; parse(emit(doc)) is the identity.
inline Json emit_workspace(const WorkspaceDocument& doc) {
    Json out = Json::object();
    out["field"] = "rational";
    if (doc.algebra) {
        out["algebra"] = Json::object();
        out["algebra"]["dim"] = doc.algebra->dim;
        out["algebra"]["mu"] = detail::tensor3_json(doc.algebra->mu);
    }
    if (doc.bimodule) {
        out["bimodule"] = Json::object();
        out["bimodule"]["module_dim"] = doc.bimodule->module_dim;
        out["bimodule"]["left"] = detail::tensor3_json(doc.bimodule->left);
        out["bimodule"]["right"] = detail::tensor3_json(doc.bimodule->right);
    }
    if (doc.T1 || doc.T2) {
        out["operators"] = Json::object();
        if (doc.T1) out["operators"]["T1"] = detail::operator_json(*doc.T1);
        if (doc.T2) out["operators"]["T2"] = detail::operator_json(*doc.T2);
    }
    if (doc.dendriform) {
        out["dendriform"] = Json::object();
        out["dendriform"]["dim"] = doc.dendriform->dim;
        out["dendriform"]["prec1"] = detail::tensor3_json(doc.dendriform->prec1);
        out["dendriform"]["succ1"] = detail::tensor3_json(doc.dendriform->succ1);
        out["dendriform"]["prec2"] = detail::tensor3_json(doc.dendriform->prec2);
        out["dendriform"]["succ2"] = detail::tensor3_json(doc.dendriform->succ2);
    }
    if (doc.deformation) {
        Json d = Json::object();
        d["order"] = doc.deformation->order;
        Json t1 = Json::array(), t2 = Json::array();
        for (const auto& t : doc.deformation->T1s) t1.push_back(detail::operator_json(t));
        for (const auto& t : doc.deformation->T2s) t2.push_back(detail::operator_json(t));
        d["T1"] = t1;
        d["T2"] = t2;
        auto tensors = [&](const char* key, const std::optional<std::vector<BilinearMap>>& v) {
            if (!v) return;
            Json arr = Json::array();
            for (const auto& b : *v) arr.push_back(detail::tensor3_json(b));
            d[key] = arr;
        };
        tensors("mu", doc.deformation->mus);
        tensors("l", doc.deformation->ls);
        tensors("r", doc.deformation->rs);
        out["deformation"] = d;
    }
    if (doc.r1 || doc.r2) {
        Json t = Json::object();
        auto two = [&](const TwoTensor& r) {
            Json arr = Json::array();
            for (int i = 0; i < r.dim; ++i) {
                Json row = Json::array();
                for (int k = 0; k < r.dim; ++k) row.push_back(detail::scalar_json(r.at(i, k)));
                arr.push_back(std::move(row));
            }
            return arr;
        };
        if (doc.r1) t["r1"] = two(*doc.r1);
        if (doc.r2) t["r2"] = two(*doc.r2);
        out["tensors"] = t;
    }
    return out;
}

inline WorkspaceDocument parse_workspace(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("not valid JSON: ") + e.what());
    }
    if (!j.is_object()) detail::fail("$", "top level must be an object");
    WorkspaceDocument doc;
    detail::note_unknown_keys(
        j, {"field", "algebra", "bimodule", "operators", "dendriform", "deformation", "tensors"}, "$", doc.warnings);

    if (!j.contains("field") || !j["field"].is_string() || j["field"].get<std::string>() != "rational")
        detail::fail("$.field", "must be the string \"rational\"");

    if (j.contains("algebra")) {
        const Json& a = j["algebra"];
        detail::note_unknown_keys(a, {"dim", "mu"}, "$.algebra", doc.warnings);
        if (!a.contains("dim") || !a["dim"].is_number_unsigned()) detail::fail("$.algebra.dim", "expected a natural number");
        const int dim = a["dim"].get<int>();
        if (!a.contains("mu")) detail::fail("$.algebra.mu", "missing");
        doc.algebra = Algebra(dim, detail::parse_tensor3(a["mu"], dim, dim, dim, "$.algebra.mu"));
    }

    if (j.contains("bimodule")) {
        if (!doc.algebra) detail::fail("$.bimodule", "requires an algebra block");
        const int da = doc.algebra->dim;
        const Json& b = j["bimodule"];
        if (b.is_string()) {
            const std::string kind = b.get<std::string>();
            if (kind == "adjoint")
                doc.bimodule = adjoint_bimodule(*doc.algebra);
            else if (kind == "coadjoint")
                doc.bimodule = coadjoint_bimodule(*doc.algebra);
            else
                detail::fail("$.bimodule", "string form must be \"adjoint\" or \"coadjoint\"");
        } else {
            detail::note_unknown_keys(b, {"module_dim", "left", "right"}, "$.bimodule", doc.warnings);
            if (!b.contains("module_dim") || !b["module_dim"].is_number_unsigned())
                detail::fail("$.bimodule.module_dim", "expected a natural number");
            const int dm = b["module_dim"].get<int>();
            doc.bimodule = Bimodule(da, dm, detail::parse_tensor3(b["left"], da, dm, dm, "$.bimodule.left"),
                                    detail::parse_tensor3(b["right"], dm, da, dm, "$.bimodule.right"));
        }
    }

    if (j.contains("operators")) {
        if (!doc.algebra || !doc.bimodule) detail::fail("$.operators", "requires algebra and bimodule blocks");
        const Json& o = j["operators"];
        detail::note_unknown_keys(o, {"T1", "T2"}, "$.operators", doc.warnings);
        const int da = doc.algebra->dim, dm = doc.bimodule->module_dim;
        if (o.contains("T1")) doc.T1 = detail::parse_operator(o["T1"], da, dm, "$.operators.T1");
        if (o.contains("T2")) doc.T2 = detail::parse_operator(o["T2"], da, dm, "$.operators.T2");
    }

    if (j.contains("dendriform")) {
        const Json& d = j["dendriform"];
        detail::note_unknown_keys(d, {"dim", "prec1", "succ1", "prec2", "succ2"}, "$.dendriform", doc.warnings);
        if (!d.contains("dim") || !d["dim"].is_number_unsigned())
            detail::fail("$.dendriform.dim", "expected a natural number");
        const int dim = d["dim"].get<int>();
        CompatibleDendriform cd;
        cd.dim = dim;
        cd.prec1 = detail::parse_tensor3(d["prec1"], dim, dim, dim, "$.dendriform.prec1");
        cd.succ1 = detail::parse_tensor3(d["succ1"], dim, dim, dim, "$.dendriform.succ1");
        cd.prec2 = detail::parse_tensor3(d["prec2"], dim, dim, dim, "$.dendriform.prec2");
        cd.succ2 = detail::parse_tensor3(d["succ2"], dim, dim, dim, "$.dendriform.succ2");
        doc.dendriform = cd;
    }

    if (j.contains("deformation")) {
        if (!doc.algebra || !doc.bimodule) detail::fail("$.deformation", "requires algebra and bimodule blocks");
        const Json& d = j["deformation"];
        detail::note_unknown_keys(d, {"order", "T1", "T2", "mu", "l", "r"}, "$.deformation", doc.warnings);
        if (!d.contains("order") || !d["order"].is_number_unsigned())
            detail::fail("$.deformation.order", "expected a natural number");
        DeformationBlock blk;
        blk.order = d["order"].get<int>();
        const int da = doc.algebra->dim, dm = doc.bimodule->module_dim;
        auto parse_ops = [&](const char* key) {
            const Json& arr = d[key];
            if (!arr.is_array() || static_cast<int>(arr.size()) != blk.order + 1)
                detail::fail(std::string("$.deformation.") + key,
                             "expected " + std::to_string(blk.order + 1) + " matrices");
            std::vector<LinOp> out;
            for (size_t i = 0; i < arr.size(); ++i)
                out.push_back(detail::parse_operator(arr[i], da, dm,
                                                     std::string("$.deformation.") + key + "[" + std::to_string(i) +
                                                         "]"));
            return out;
        };
        if (!d.contains("T1") || !d.contains("T2")) detail::fail("$.deformation", "needs T1 and T2 series");
        blk.T1s = parse_ops("T1");
        blk.T2s = parse_ops("T2");
        auto parse_tensors = [&](const char* key, int d1, int d2, int dout) {
            const Json& arr = d[key];
            if (!arr.is_array() || static_cast<int>(arr.size()) != blk.order + 1)
                detail::fail(std::string("$.deformation.") + key,
                             "expected " + std::to_string(blk.order + 1) + " tensors");
            std::vector<BilinearMap> out;
            for (size_t i = 0; i < arr.size(); ++i)
                out.push_back(detail::parse_tensor3(arr[i], d1, d2, dout,
                                                    std::string("$.deformation.") + key + "[" + std::to_string(i) +
                                                        "]"));
            return out;
        };
        if (d.contains("mu")) blk.mus = parse_tensors("mu", da, da, da);
        if (d.contains("l")) blk.ls = parse_tensors("l", da, dm, dm);
        if (d.contains("r")) blk.rs = parse_tensors("r", dm, da, dm);
        if (blk.is_full() && !(blk.mus && blk.ls && blk.rs))
            detail::fail("$.deformation", "full deformations need all of mu, l, r");
        doc.deformation = std::move(blk);
    }

    if (j.contains("tensors")) {
        if (!doc.algebra) detail::fail("$.tensors", "requires an algebra block");
        const Json& t = j["tensors"];
        detail::note_unknown_keys(t, {"r1", "r2"}, "$.tensors", doc.warnings);
        const int da = doc.algebra->dim;
        auto parse_two = [&](const char* key) {
            const Json& arr = t[key];
            TwoTensor r(da);
            if (!arr.is_array() || static_cast<int>(arr.size()) != da)
                detail::fail(std::string("$.tensors.") + key, "expected " + std::to_string(da) + " rows");
            for (int i = 0; i < da; ++i) {
                const Json& row = arr[static_cast<size_t>(i)];
                if (!row.is_array() || static_cast<int>(row.size()) != da)
                    detail::fail(std::string("$.tensors.") + key + "[" + std::to_string(i) + "]",
                                 "expected " + std::to_string(da) + " columns");
                for (int k = 0; k < da; ++k)
                    r.at(i, k) = detail::parse_scalar(row[static_cast<size_t>(k)],
                                                      std::string("$.tensors.") + key + "[" + std::to_string(i) +
                                                          "][" + std::to_string(k) + "]");
            }
            return r;
        };
        if (t.contains("r1")) doc.r1 = parse_two("r1");
        if (t.contains("r2")) doc.r2 = parse_two("r2");
    }

    return doc;
}

// ---- reports ---------------------------------------------------------------

struct Verdict {
    std::string name;
    bool pass = true;
    std::vector<Defect> defects;
};

struct Report {
    std::string command;
    std::vector<Verdict> verdicts;
    Json data = Json::object();

    bool all_pass() const {
        for (const auto& v : verdicts)
            if (!v.pass) return false;
        return true;
    }

    void add(const std::string& name, const CheckReport& rep) {
        verdicts.push_back({name, rep.pass(), rep.defects});
    }
    void add_flag(const std::string& name, bool pass) { verdicts.push_back({name, pass, {}}); }
};

inline Json defect_json(const Defect& d) {
    Json out = Json::object();
    out["identity"] = d.identity;
    out["index"] = d.index;
    Json vals = Json::array();
    for (const auto& v : d.value) vals.push_back(v.str());
    out["defect"] = vals;
    return out;
}

inline std::string emit_report(const Report& r, const std::string& format) {
    if (format == "json") {
        Json out = Json::object();
        if (!r.command.empty()) out["command"] = r.command;
        if (!r.verdicts.empty()) {
            Json vs = Json::array();
            for (const auto& v : r.verdicts) {
                Json jv = Json::object();
                jv["name"] = v.name;
                jv["pass"] = v.pass;
                if (!v.defects.empty()) {
                    Json ds = Json::array();
                    size_t shown = 0;
                    for (const auto& d : v.defects) {
                        if (shown++ == 16) break; // keep reports readable; count stays exact
                        ds.push_back(defect_json(d));
                    }
                    jv["defect_count"] = v.defects.size();
                    jv["defects"] = ds;
                }
                vs.push_back(std::move(jv));
            }
            out["verdicts"] = vs;
        }
        if (!r.data.empty()) out["data"] = r.data;
        return out.dump(2) + "\n";
    }
    if (format != "text") throw std::invalid_argument("emit_report: format must be json or text");
    std::ostringstream os;
    if (!r.command.empty()) os << "command: " << r.command << "\n";
    for (const auto& v : r.verdicts) {
        os << (v.pass ? "  pass  " : "  FAIL  ") << v.name << "\n";
        size_t shown = 0;
        for (const auto& d : v.defects) {
            if (shown++ == 16) {
                os << "         ... " << v.defects.size() - 16 << " more defects\n";
                break;
            }
            os << "         " << d.identity << " at (";
            for (size_t i = 0; i < d.index.size(); ++i) os << (i ? "," : "") << d.index[i];
            os << ") defect = [";
            for (size_t i = 0; i < d.value.size(); ++i) os << (i ? ", " : "") << d.value[i].str();
            os << "]\n";
        }
    }
    if (!r.data.empty()) os << "data: " << r.data.dump(2) << "\n";
    return os.str();
}

// ---- commands ---------------------------------------------------------------

struct CommandOptions {
    std::string complex_kind; // o | co | cass | coa | cdend
    int degree = 0;
    std::optional<int> order;
};

namespace detail {

struct CohomologySummary {
    int degree = 0;
    int dim_cocycles = 0;
    int dim_coboundaries = 0;
    int dim = 0;
};

inline CohomologySummary summarize(const CochainComplex& cx, int degree) {
    CohomologySummary s;
    s.degree = degree;
    Matrix d_n = coboundary_matrix(cx, degree);
    Subspace cycles = kernel_basis(d_n);
    s.dim_cocycles = cycles.dim();
    if (degree > 0) {
        Matrix d_prev = coboundary_matrix(cx, degree - 1);
        if (!(d_n * d_prev).is_zero()) throw std::logic_error("cohomology: delta o delta != 0");
        s.dim_coboundaries = rank(d_prev);
    }
    s.dim = s.dim_cocycles - s.dim_coboundaries;
    return s;
}

inline Json summary_json(const CohomologySummary& s) {
    Json out = Json::object();
    out["degree"] = s.degree;
    out["dim_cocycles"] = s.dim_cocycles;
    out["dim_coboundaries"] = s.dim_coboundaries;
    out["cohomology_dim"] = s.dim;
    return out;
}

inline PairDeformation pair_deformation_of(const WorkspaceDocument& doc, std::optional<int> order) {
    if (!doc.deformation) throw std::invalid_argument("workspace has no deformation block");
    PairDeformation d;
    d.order = order.value_or(doc.deformation->order);
    if (d.order > doc.deformation->order) throw std::invalid_argument("requested order exceeds the deformation block");
    d.T1s.assign(doc.deformation->T1s.begin(), doc.deformation->T1s.begin() + d.order + 1);
    d.T2s.assign(doc.deformation->T2s.begin(), doc.deformation->T2s.begin() + d.order + 1);
    return d;
}

} // namespace detail

inline Report run_command(const std::string& cmd, const WorkspaceDocument& doc, const CommandOptions& opts) {
    Report rep;
    rep.command = cmd;
    for (const auto& w : doc.warnings) rep.data["warnings"].push_back(w);

    if (cmd == "check") {
        if (doc.algebra) rep.add("algebra associativity", check_associative(*doc.algebra));
        if (doc.algebra && doc.bimodule) rep.add("bimodule axioms", check_bimodule(*doc.algebra, *doc.bimodule));
        if (doc.T1) rep.add("T1 O-operator", is_ooperator(doc.context(), *doc.T1));
        if (doc.T2) rep.add("T2 O-operator", is_ooperator(doc.context(), *doc.T2));
        if (doc.T1 && doc.T2) rep.add("compatible pair", is_compatible_pair(doc.context(), doc.pair()));
        if (doc.dendriform) rep.add("compatible dendriform", check_compatible_dendriform(*doc.dendriform));
        if (doc.deformation) {
            if (doc.deformation->is_full()) {
                FullDeformation fd;
                fd.order = doc.deformation->order;
                fd.mus = *doc.deformation->mus;
                fd.ls = *doc.deformation->ls;
                fd.rs = *doc.deformation->rs;
                fd.T1s = doc.deformation->T1s;
                fd.T2s = doc.deformation->T2s;
                rep.add("full deformation", check_full_deformation(fd));
            } else {
                rep.add("pair deformation", check_pair_deformation(doc.context(), detail::pair_deformation_of(doc, {})));
            }
        }
        if (doc.r1 && doc.algebra) rep.add("r1 Yang-Baxter", aybe_check(*doc.algebra, *doc.r1));
        if (doc.r2 && doc.algebra) rep.add("r2 Yang-Baxter", aybe_check(*doc.algebra, *doc.r2));
        if (doc.r1 && doc.r2 && doc.algebra)
            rep.add("compatible Yang-Baxter", compatible_aybe_check(*doc.algebra, *doc.r1, *doc.r2));
        if (rep.verdicts.empty()) throw std::invalid_argument("check: the workspace has no checkable blocks");
        return rep;
    }

    if (cmd == "cohomology") {
        if (opts.degree < 0) throw std::invalid_argument("cohomology: degree must be >= 0");
        OContext ctx = doc.context();
        CochainComplex cx;
        if (opts.complex_kind == "o") {
            LinOp t = doc.T1 ? (doc.T2 ? *doc.T1 + *doc.T2 : *doc.T1) : throw std::invalid_argument(
                                                                            "cohomology o: needs at least T1");
            cx = ooperator_complex(ctx, t);
            rep.data["operator"] = doc.T2 ? "T1+T2" : "T1";
        } else if (opts.complex_kind == "co") {
            cx = pair_complex(ctx, doc.pair());
        } else if (opts.complex_kind == "cass") {
            OperatorPair p = doc.pair();
            cx = cass_complex(induced_compatible_algebra(ctx, p), induced_compatible_bimodule(ctx, p));
            rep.data["coefficients"] = "induced";
        } else if (opts.complex_kind == "coa") {
            cx = coa_complex(ctx, doc.pair());
        } else if (opts.complex_kind == "cdend") {
            CompatibleDendriform cd =
                doc.dendriform ? *doc.dendriform : induced_dendriform(ctx, doc.pair());
            if (opts.degree < 1) throw std::invalid_argument("cohomology cdend: degree must be >= 1");
            cx = cdend_complex(cd);
        } else {
            throw std::invalid_argument("cohomology: --complex must be one of o, co, cass, coa, cdend");
        }
        rep.data["complex"] = opts.complex_kind;
        rep.data.update(detail::summary_json(detail::summarize(cx, opts.degree)));
        return rep;
    }

    if (cmd == "mc") {
        OContext ctx = doc.context();
        LInftyElement defect = mc_defect(ctx, mc_element(ctx, doc.pair()));
        rep.add_flag("Maurer-Cartan element", defect.is_zero());
        Json comps = Json::array();
        if (defect.vprime && !defect.vprime->is_zero()) comps.push_back("structure part");
        for (size_t i = 0; i < defect.a_parts.size(); ++i)
            if (!defect.a_parts[i].is_zero()) comps.push_back("operator part " + std::to_string(i + 1));
        rep.data["nonzero_components"] = comps;
        if (!defect.is_zero()) rep.data["defect"] = coa_json(ctx, COACochain{3, defect});
        return rep;
    }

    if (cmd == "obstruct") {
        OContext ctx = doc.context();
        PairDeformation d = detail::pair_deformation_of(doc, opts.order);
        TupleCochain ob = obstruction(ctx, d);
        rep.add_flag("deformation valid", true); // obstruction() validated it
        rep.add_flag("obstruction is a 2-cocycle", delta_pair(ctx, d.base(), ob).is_zero());
        rep.data["order"] = d.order;
        rep.data["obstruction_is_zero"] = ob.is_zero();
        rep.data["obstruction"] = tuple_json(ob);
        return rep;
    }

    if (cmd == "extend") {
        OContext ctx = doc.context();
        PairDeformation d = detail::pair_deformation_of(doc, opts.order);
        auto witness = is_extensible(ctx, d);
        rep.add_flag("extensible", witness.has_value());
        rep.data["order"] = d.order;
        if (witness) {
            rep.data["T1_next"] = detail::operator_json(witness->first);
            rep.data["T2_next"] = detail::operator_json(witness->second);
        }
        return rep;
    }

    if (cmd == "aybe") {
        if (!doc.algebra) throw std::invalid_argument("aybe: needs an algebra block");
        if (!doc.r1) throw std::invalid_argument("aybe: needs tensors.r1");
        const Algebra& alg = *doc.algebra;
        rep.add("r1 Yang-Baxter", aybe_check(alg, *doc.r1));
        if (doc.r2) {
            rep.add("r2 Yang-Baxter", aybe_check(alg, *doc.r2));
            rep.add("compatible Yang-Baxter", compatible_aybe_check(alg, *doc.r1, *doc.r2));
        }
        OContext adj = make_context(alg, adjoint_bimodule(alg));
        LinOp rb1 = rb_from_tensor(alg, *doc.r1);
        rep.add("induced T1 Rota-Baxter", is_ooperator(adj, rb1));
        rep.data["induced_T1"] = detail::operator_json(rb1);
        if (doc.r2) {
            LinOp rb2 = rb_from_tensor(alg, *doc.r2);
            rep.add("induced T2 Rota-Baxter", is_ooperator(adj, rb2));
            rep.add("induced pair compatible", is_compatible_pair(adj, {rb1, rb2}));
            rep.data["induced_T2"] = detail::operator_json(rb2);
        }
        rep.data["r1_skew"] = is_skew(*doc.r1);
        if (doc.r2) rep.data["r2_skew"] = is_skew(*doc.r2);
        if (is_skew(*doc.r1) && doc.r2 && is_skew(*doc.r2)) {
            OContext coadj = make_context(alg, coadjoint_bimodule(alg));
            rep.add("sharp pair on coadjoint bimodule",
                    is_compatible_pair(coadj, {sharp(alg, *doc.r1), sharp(alg, *doc.r2)}));
        }
        return rep;
    }

    if (cmd == "dendriform") {
        CompatibleDendriform cd = doc.dendriform ? *doc.dendriform : induced_dendriform(doc.context(), doc.pair());
        rep.add("compatible dendriform axioms", check_compatible_dendriform(cd));
        CochainComplex cx = cdend_complex(cd);
        bool dd = true;
        for (int n = 1; n <= 2; ++n)
            dd = dd && (coboundary_matrix(cx, n + 1) * coboundary_matrix(cx, n)).is_zero();
        rep.add_flag("delta^2 = 0 (degrees 1-2)", dd);
        const int top = std::max(1, opts.degree);
        Json dims = Json::array();
        for (int n = 1; n <= top; ++n) dims.push_back(detail::summary_json(detail::summarize(cx, n)));
        rep.data["cohomology"] = dims;
        return rep;
    }

    if (cmd == "induce") {
        OContext ctx = doc.context();
        OperatorPair p = doc.pair();
        CompatibleAlgebra ca = induced_compatible_algebra(ctx, p);
        CompatibleBimodule cb = induced_compatible_bimodule(ctx, p);
        CompatibleDendriform cd = induced_dendriform(ctx, p);
        rep.add("induced compatible algebra", check_compatible_associative(ca));
        rep.add("induced compatible bimodule", check_compatible_bimodule(ca, cb));
        rep.add("induced compatible dendriform", check_compatible_dendriform(cd));
        Json out = Json::object();
        out["compatible_algebra"] = Json::object();
        out["compatible_algebra"]["dim"] = ca.dim;
        out["compatible_algebra"]["mu1"] = detail::tensor3_json(ca.mu1);
        out["compatible_algebra"]["mu2"] = detail::tensor3_json(ca.mu2);
        out["compatible_bimodule"] = Json::object();
        out["compatible_bimodule"]["module_dim"] = cb.module_dim;
        out["compatible_bimodule"]["l1"] = detail::tensor3_json(cb.l1);
        out["compatible_bimodule"]["r1"] = detail::tensor3_json(cb.r1);
        out["compatible_bimodule"]["l2"] = detail::tensor3_json(cb.l2);
        out["compatible_bimodule"]["r2"] = detail::tensor3_json(cb.r2);
        out["dendriform"] = Json::object();
        out["dendriform"]["dim"] = cd.dim;
        out["dendriform"]["prec1"] = detail::tensor3_json(cd.prec1);
        out["dendriform"]["succ1"] = detail::tensor3_json(cd.succ1);
        out["dendriform"]["prec2"] = detail::tensor3_json(cd.prec2);
        out["dendriform"]["succ2"] = detail::tensor3_json(cd.succ2);
        rep.data["induced"] = out;
        return rep;
    }

    throw std::invalid_argument("unknown command: " + cmd);
}

} // namespace ocoh::io
