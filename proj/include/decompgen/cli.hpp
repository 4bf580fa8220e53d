/*
   Copyright 2026 The decompgen Authors

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

#ifndef DECOMPGEN_CLI_HPP
#define DECOMPGEN_CLI_HPP

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "corpus.hpp"
#include "sampling.hpp"
#include "strata.hpp"

namespace decompgen::cli {

using json = nlohmann::ordered_json;

struct Options {
    std::string command;
    std::string input;
    std::string prime = "generic";
    std::uint64_t seed = 1;
    std::string format = "table";
    bool verify = false;
    int max_degree = 32;
    std::string out = "corpus";
    std::size_t samples = 10;
    std::size_t threads = 0;
};

struct Outcome {
    int exit_code = 0;
    std::string out;
    std::string err;
};

inline const std::vector<std::string>& commands() {
    static const std::vector<std::string> c{"validate", "fiber",    "radical",      "simples",   "split-check",
                                            "fingerprint", "decmat", "trivial",     "schur",     "discriminant",
                                            "stratify", "corpus-build", "verify-all"};
    return c;
}

inline int exit_code_for(const Error& e) {
    switch (e.kind()) {
        case ErrorKind::Validation: return 2;
        case ErrorKind::Unsupported:
        case ErrorKind::Precondition: return 3;
        default: return 4;
    }
}

// ---------------------------------------------------------------------------------------------
// Rendering

namespace detail {

inline std::string scalar_text(const json& v, bool nested = false) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "-";
    if (v.is_array()) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + scalar_text(v[i], true);
        return nested ? "[" + s + "]" : s;
    }
    return v.dump();
}

inline void render(const json& j, std::ostringstream& out, const std::string& indent) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        const json& v = it.value();
        if (it.key().starts_with("_")) continue;
        if (v.is_object()) {
            out << indent << it.key() << ":\n";
            render(v, out, indent + "  ");
        } else if (v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_object(); })) {
            out << indent << it.key() << ":\n";
            auto nested = [](const json& x) {
                return x.is_object() || (x.is_array() && !x.empty() && x.front().is_object());
            };
            bool blocks = false;
            for (const auto& row : v)
                for (const auto& c : row) blocks = blocks || nested(c);
            if (blocks) {
                for (const auto& row : v) {
                    out << indent << "  -\n";
                    render(row, out, indent + "    ");
                }
                continue;
            }
            std::vector<std::string> cols;
            for (const auto& row : v)
                for (auto c = row.begin(); c != row.end(); ++c)
                    if (std::find(cols.begin(), cols.end(), c.key()) == cols.end()) cols.push_back(c.key());
            std::vector<std::vector<std::string>> cells{cols};
            for (const auto& row : v) {
                std::vector<std::string> r;
                for (const auto& c : cols) r.push_back(row.contains(c) ? scalar_text(row[c]) : "");
                cells.push_back(r);
            }
            std::vector<std::size_t> w(cols.size(), 0);
            for (const auto& r : cells)
                for (std::size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
            for (const auto& r : cells) {
                std::string line = indent + "  ";
                for (std::size_t i = 0; i < r.size(); ++i) line += r[i] + (i + 1 < r.size() ? std::string(w[i] - r[i].size() + 2, ' ') : "");
                while (!line.empty() && line.back() == ' ') line.pop_back();
                out << line << "\n";
            }
        } else {
            const std::string text = scalar_text(v);
            out << indent << it.key() << ":" << (text.empty() ? "" : " " + text) << "\n";
        }
    }
    if (j.contains("_table")) out << j["_table"].get<std::string>();
}

}  // namespace detail

inline std::string render(const json& report, const std::string& format) {
    if (format == "structured") {
        json copy = report;
        if (copy.contains("_table")) copy.erase("_table");
        return copy.dump(2) + "\n";
    }
    std::ostringstream out;
    detail::render(report, out, "");
    return out.str();
}

// ---------------------------------------------------------------------------------------------
// Loading

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    require(static_cast<bool>(in), ErrorCode::ParseError, "cannot read '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

/// A file path, or `corpus:<id>` for a built-in corpus algebra.
inline AnyAlgebra load_input(const std::string& input) {
    require(!input.empty(), ErrorCode::ParseError, "missing input algebra");
    if (input.starts_with("corpus:")) {
        const std::string id = input.substr(7);
        for (auto& e : corpus())
            if (e.id == id) return e.algebra;
        fail(ErrorCode::ParseError, "no corpus algebra '" + id + "'");
    }
    return parse_algebra(read_file(input));
}

template <ExactField F>
json vec_json(const F& f, const Vec<F>& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(f.format(x));
    return a;
}

template <ExactField F>
json simple_json(const F& f, const WedderburnData<F>& w, std::size_t i) {
    const auto& s = w.simples[i];
    json fp = json::array();
    for (const auto& c : s.fp.chi) fp.push_back(c.format("X"));
    return json{{"id", "S" + std::to_string(i + 1)},
                {"label", simple_label(f, s)},
                {"dim", s.module.dim},
                {"multiplicity", s.multiplicity},
                {"composition_multiplicity", w.composition_mult[i]},
                {"endomorphism_dim", w.endo_dims[i]},
                {"fingerprint", fp}};
}

// ---------------------------------------------------------------------------------------------
// Commands

template <ExactField K>
json header(const std::string& command, const FiniteFreeAlgebra<K>& A) {
    return json{{"command", command}, {"algebra", A.name}, {"ring", A.ring.desc.name()}, {"dim", A.dim()}};
}

inline json decmat_json(const DecompositionMatrix& D) {
    return json{{"prime", D.prime},
                {"rows", D.rows},
                {"cols", D.cols},
                {"row_dims", D.row_dims},
                {"col_dims", D.col_dims},
                {"matrix", D.d},
                {"trivial", is_trivial(D)}};
}

template <ExactField K>
json discriminant_json(const Ring<K>& R, const Discriminant<K>& D) {
    json lattice{{"rank", D.lattice.rank()}, {"saturated", D.lattice.saturated}};
    json rows = json::array();
    for (const auto& r : D.lattice.basis) {
        json row = json::array();
        for (const auto& x : r) row.push_back(R.format(x));
        rows.push_back(row);
    }
    lattice["basis"] = rows;
    json comps = json::array();
    for (const auto& c : D.components)
        comps.push_back(json{{"prime", c.candidate.str(R)},
                             {"status", status_name(c.status)},
                             {"fiber_radical", c.fiber_radical},
                             {"reason", c.reason}});
    return json{{"label", "candidate"},
                {"generator", R.format(D.candidate.g)},
                {"gram_factor", R.format(D.candidate.gram)},
                {"minor_factor", R.format(D.candidate.minor)},
                {"denominator_factor", R.format(D.candidate.denominators)},
                {"simple_trace_form", D.candidate.simple_trace_form},
                {"generic_radical", D.generic_radical},
                {"radical_lattice", lattice},
                {"components", comps}};
}

template <ExactField K>
json stratify_json(const StratificationTree<K>& T) {
    json nodes = json::array(), strata = json::array();
    for (std::size_t i = 0; i < T.nodes.size(); ++i) {
        const auto& n = T.nodes[i];
        json comps = json::array();
        for (const auto& c : n.components)
            comps.push_back(json{{"local", c.local},
                                 {"prime", c.prime ? json(c.prime->str()) : json(nullptr)},
                                 {"status", c.status},
                                 {"fiber_radical", c.fiber_radical},
                                 {"child", c.child ? json(*c.child) : json(nullptr)},
                                 {"shared", c.shared},
                                 {"sampled", c.sampled},
                                 {"hidden", c.hidden ? json(c.hidden->str()) : json(nullptr)},
                                 {"reason", c.reason}});
        nodes.push_back(json{{"id", n.id},
                             {"parent", n.parent ? json(*n.parent) : json(nullptr)},
                             {"point", n.point.str()},
                             {"ring", n.ring},
                             {"discriminant", n.discriminant},
                             {"generic_radical", n.generic_radical},
                             {"unresolved", n.unresolved},
                             {"note", n.note},
                             {"components", comps}});
        strata.push_back(json{{"node", n.id}, {"point", n.point.str()}, {"stratum", T.describe(i)}, {"unresolved", n.unresolved}});
    }
    return json{{"nodes", nodes}, {"strata", strata}};
}

template <ExactField K>
Outcome run_on(const Options& o, const FiniteFreeAlgebra<K>& A) {
    const ChopOptions chop{o.seed, 400, o.verify};
    json r = header(o.command, A);
    int code = 0;
    auto prime = [&]() { return PrimeSpec<K>::parse(A.ring, o.prime); };
    if (o.command == "validate") {
        r["basis"] = A.basis;
        r["has_trace"] = A.trace.has_value();
        r["valid"] = true;
    } else if (o.command == "fiber") {
        auto p = prime();
        r["prime"] = p.str();
        std::visit(
            [&](const auto& F) {
                r["residue_field"] = F.field.name();
                r["unit"] = vec_json(F.field, F.unit);
                json consts = json::array();
                const std::size_t n = F.dim();
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j)
                        for (std::size_t k = 0; k < n; ++k)
                            if (!scalar_is_zero(F.at(i, j, k)))
                                consts.push_back(json{{"i", i}, {"j", j}, {"k", k}, {"value", F.field.format(F.at(i, j, k))}});
                r["constants"] = consts;
            },
            specialize(A, p));
    } else if (o.command == "radical" || o.command == "simples" || o.command == "split-check" ||
               o.command == "fingerprint") {
        auto p = prime();
        Analysis<K> an(A, chop);
        r["prime"] = p.str();
        std::visit(
            [&](const auto& info) {
                const auto& f = info.field();
                const auto& w = info.wd;
                r["residue_field"] = f.name();
                if (o.command == "radical") {
                    r["radical_dim"] = w.radical_dim;
                    json rows = json::array();
                    for (std::size_t i = 0; i < w.radical.rows(); ++i) rows.push_back(vec_json(f, w.radical.row(i)));
                    r["radical_basis"] = rows;
                    auto idx = nilpotency_index(info.algebra, w.radical);
                    r["nilpotency_index"] = idx ? json(*idx) : json(nullptr);
                } else if (o.command == "simples") {
                    r["radical_dim"] = w.radical_dim;
                    r["split"] = w.split;
                    json s = json::array();
                    for (std::size_t i = 0; i < w.simples.size(); ++i) s.push_back(simple_json(f, w, i));
                    r["simples"] = s;
                } else if (o.command == "split-check") {
                    r["split"] = w.split;
                    r["endomorphism_dims"] = w.endo_dims;
                    if (!w.split) code = 1;
                } else {
                    json s = json::array();
                    for (std::size_t i = 0; i < w.simples.size(); ++i) {
                        json fp = json::array();
                        for (const auto& c : w.simples[i].fp.chi) fp.push_back(c.format("X"));
                        s.push_back(json{{"id", "S" + std::to_string(i + 1)}, {"dim", w.simples[i].module.dim}, {"fingerprint", fp}});
                    }
                    r["simples"] = s;
                    using FG = std::decay_t<decltype(f)>;
                    if constexpr (kIsFractionFieldOf<K, FG>) {
                        if (p.is_generic()) {
                            auto gens = attractor_generators(A.ring, f, w.simples);
                            json g = json::array();
                            for (const auto& x : gens) g.push_back(f.format(x));
                            r["attractor_generators"] = g;
                            r["gen_locus"] = A.ring.format(gen_locus(A.ring, gens));
                        }
                    }
                }
            },
            an.fiber(p));
    } else if (o.command == "decmat") {
        auto p = prime();
        Analysis<K> an(A, chop);
        auto D = decomposition_matrix(an, p);
        r.update(decmat_json(D));
        r["_table"] = D.table();
    } else if (o.command == "trivial") {
        auto p = prime();
        Analysis<K> an(A, chop);
        auto m = dec_gen_membership(an, p, o.verify);
        r["prime"] = p.str();
        r["result"] = m.trivial ? "Trivial" : "NonTrivial";
        r["generic_radical"] = m.generic_radical;
        r["fiber_radical"] = m.fiber_radical;
        if (m.matrix) r["matrix"] = m.matrix->d;
        if (!m.trivial) code = 1;
    } else if (o.command == "schur") {
        Analysis<K> an(A, chop);
        auto s = schur_elements(an);
        json el = json::array();
        for (std::size_t i = 0; i < s.values.size(); ++i) el.push_back(json{{"simple", s.labels[i]}, {"value", s.values[i]}});
        r["schur_elements"] = el;
        auto D = dec_ex(an);
        auto x = schur_discriminant_crosscheck(an, D);
        r["product"] = x.product;
        r["schur_primes"] = x.schur_primes;
        r["excluded"] = x.excluded;
        r["matches"] = x.matches;
        if (!x.matches) code = 1;
    } else if (o.command == "discriminant") {
        Analysis<K> an(A, chop);
        r.update(discriminant_json(A.ring, dec_ex(an)));
    } else if (o.command == "stratify") {
        r.update(stratify_json(stratify(A, chop)));
    } else {
        fail(ErrorCode::ParseError, "unknown command '" + o.command + "'");
    }
    return Outcome{code, render(r, o.format), ""};
}

// ---------------------------------------------------------------------------------------------
// Corpus-wide commands

inline Outcome corpus_build(const Options& o) {
    namespace fs = std::filesystem;
    fs::create_directories(o.out);
    json files = json::array();
    for (const auto& e : corpus()) {
        const fs::path path = fs::path(o.out) / (e.id + ".alg");
        std::ofstream f(path, std::ios::binary);
        require(static_cast<bool>(f), ErrorCode::ParseError, "cannot write " + path.string());
        f << "# " << e.builder << "\n" << serialize(e.algebra);
        files.push_back(json{{"id", e.id}, {"builder", e.builder}, {"file", path.string()}});
    }
    json r{{"command", "corpus-build"}, {"out_dir", o.out}, {"files", files}};
    return Outcome{0, render(r, o.format), ""};
}

struct VerifyJob {
    std::size_t algebra = 0;
    std::string prime;
    std::string kind;  // excluded or sampled
    json result;
};

template <ExactField K>
json verify_prime(const FiniteFreeAlgebra<K>& A, const std::string& prime_text, const ChopOptions& chop) {
    Analysis<K> an(A, chop);
    auto p = PrimeSpec<K>::parse(A.ring, prime_text);
    json r{{"prime", p.str()}};
    try {
        const bool by_radical = triviality_by_radical(an, p);
        const auto D = decomposition_matrix(an, p);
        r["trivial_by_radical"] = by_radical;
        r["trivial_by_matrix"] = is_trivial(D);
        r["agree"] = by_radical == is_trivial(D);
        r["generic_radical"] = radical_dim(an.generic());
        r["fiber_radical"] = radical_dim(an.fiber(p));
        r["matrix"] = D.compact();
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::Internal) throw;
        r["skipped"] = e.what();
    }
    return r;
}

inline std::string prime_arg(const std::string& canonical) {
    // canonical "(a, b)" to the gen=[...] syntax
    return canonical == "(0)" ? "generic" : "gen=[" + canonical.substr(1, canonical.size() - 2) + "]";
}

inline Outcome verify_all(const Options& o) {
    const ChopOptions chop{o.seed, 400, o.verify};
    auto entries = corpus();
    json algebras = json::array();
    std::vector<VerifyJob> jobs;
    std::vector<json> per(entries.size());
    for (std::size_t a = 0; a < entries.size(); ++a) {
        const auto& e = entries[a];
        json rep{{"id", e.id}};
        if (!e.generic_split || e.stretch) {
            rep["skipped"] = !e.generic_split ? "generic fiber not split" : "stretch entry";
            per[a] = rep;
            continue;
        }
        std::visit(
            [&](const auto& A) {
                using K = std::decay_t<decltype(A.ring.field)>;
                Analysis<K> an(A, chop);
                auto D = dec_ex(an);
                json ex = json::array();
                for (const auto& p : D.excluded()) {
                    ex.push_back(p.str());
                    jobs.push_back({a, prime_arg(p.str()), "excluded", {}});
                }
                rep["candidate"] = A.ring.format(D.candidate.g);
                rep["excluded"] = ex;
                for (const auto& p : sample_primes(A.ring, o.samples, o.seed + a, D.candidate.g))
                    jobs.push_back({a, prime_arg(p.str()), "sampled", {}});
                if (A.trace && D.generic_radical == 0) {
                    auto x = schur_discriminant_crosscheck(an, D);
                    rep["schur_matches"] = x.matches;
                }
            },
            e.algebra);
        per[a] = rep;
    }
    const std::size_t nthreads = std::max<std::size_t>(1, o.threads ? o.threads : std::thread::hardware_concurrency());
    std::atomic<std::size_t> next{0};
    std::mutex err_mu;
    std::string first_error;
    auto worker = [&]() {
        for (std::size_t i = next++; i < jobs.size(); i = next++) {
            try {
                jobs[i].result = std::visit([&](const auto& A) { return verify_prime(A, jobs[i].prime, chop); },
                                            entries[jobs[i].algebra].algebra);
            } catch (const std::exception& ex) {
                std::lock_guard lock(err_mu);
                jobs[i].result = json{{"prime", jobs[i].prime}, {"error", ex.what()}};
            }
        }
    };
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    std::size_t disagreements = 0, checked = 0, sampled_nontrivial = 0, errors = 0;
    for (auto& j : jobs) {
        j.result["kind"] = j.kind;
        if (j.result.contains("error")) ++errors;
        if (j.result.contains("agree")) {
            ++checked;
            if (!j.result["agree"].get<bool>()) ++disagreements;
            if (j.kind == "sampled" && !j.result["trivial_by_radical"].get<bool>()) ++sampled_nontrivial;
            if (j.kind == "excluded" && j.result["trivial_by_radical"].get<bool>()) ++disagreements;
        }
        per[j.algebra]["checks"].push_back(j.result);
    }
    bool schur_ok = true;
    for (const auto& p : per) {
        if (p.contains("schur_matches") && !p["schur_matches"].get<bool>()) schur_ok = false;
        algebras.push_back(p);
    }
    const bool passed = disagreements == 0 && sampled_nontrivial == 0 && errors == 0 && schur_ok;
    json r{{"command", "verify-all"},
           {"seed", o.seed},
           {"checked", checked},
           {"disagreements", disagreements},
           {"sampled_nontrivial", sampled_nontrivial},
           {"errors", errors},
           {"passed", passed},
           {"algebras", algebras}};
    return Outcome{passed ? 0 : 1, render(r, o.format), ""};
}

// ---------------------------------------------------------------------------------------------
// Entry point

inline Outcome execute(const Options& o) {
    factor_degree_limit().store(o.max_degree);
    try {
        if (o.command == "corpus-build") return corpus_build(o);
        if (o.command == "verify-all") return verify_all(o);
        require(std::find(commands().begin(), commands().end(), o.command) != commands().end(), ErrorCode::ParseError,
                "unknown command '" + o.command + "'");
        AnyAlgebra A = load_input(o.input);
        return std::visit([&](const auto& a) { return run_on(o, a); }, A);
    } catch (const Error& e) {
        return Outcome{exit_code_for(e), "", std::string("error: ") + e.what() + "\n"};
    }
}

/// Parses command-line arguments (without the program name) and runs.
inline Outcome run(std::vector<std::string> args) {
    Options o;
    CLI::App app{"Decomposition matrices, radicals and stratifications of finite free algebras", "decompgen"};
    std::string cmd_help = "one of:";
    for (const auto& c : commands()) cmd_help += " " + c;
    app.add_option("command", o.command, cmd_help)->required()->check(CLI::IsMember(commands()));
    app.add_option("input", o.input, "algebra definition file, or corpus:<id>");
    app.add_option("--prime", o.prime, "p=<int> | gen=[<poly>,...] | generic")->capture_default_str();
    app.add_option("--seed", o.seed, "seed for randomized routines")->capture_default_str();
    app.add_option("--format", o.format, "table or structured")->check(CLI::IsMember({"table", "structured"}))->capture_default_str();
    app.add_flag("--verify", o.verify, "cross-check matrices against radicals and simples against Hom dimensions");
    app.add_option("--max-degree", o.max_degree, "largest degree factored over QQ")->capture_default_str();
    app.add_option("--out", o.out, "output directory for corpus-build")->capture_default_str();
    app.add_option("--samples", o.samples, "sampled primes per algebra in verify-all")->capture_default_str();
    app.add_option("--threads", o.threads, "worker threads for verify-all (0 = hardware)")->capture_default_str();
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        return Outcome{0, app.help(), ""};
    } catch (const CLI::ParseError& e) {
        return Outcome{2, "", std::string("error: ") + e.what() + "\n" + app.help()};
    }
    return execute(o);
}

}  // namespace decompgen::cli

#endif  // DECOMPGEN_CLI_HPP
