// annseq: annihilator ideals of finite n-dimensional sequences.
//
// Subcommands: compute (run an engine on a JSON document), gen (random
// values over a staircase), bench (built-in suites), verify (membership
// check of a generator file against a sequence document).
//
// Exit codes: 0 success, 1 input error, 2 engine disagreement,
// 3 internal invariant failure.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "annseq/annihilator.hpp"
#include "annseq/bench.hpp"
#include "annseq/io.hpp"

namespace {

using namespace annseq;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitDisagreement = 2;
constexpr int kExitInternal = 3;

// "x^20, x^19*y^3, y^4" -> exponent vectors; the '*' is optional.
// Variables are the default alphabet x, y, z, u, v, w.
std::vector<Exponent> parse_monomial_list(const std::string& text, std::size_t& n_out) {
    static const std::string alphabet = "xyzuvw";
    std::vector<std::vector<std::pair<std::size_t, std::uint32_t>>> raw;
    std::size_t max_var = 0;

    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i; };
    while (i < text.size()) {
        skip_ws();
        std::vector<std::pair<std::size_t, std::uint32_t>> mono;
        bool saw_factor = false;
        while (i < text.size() && text[i] != ',') {
            skip_ws();
            if (i >= text.size() || text[i] == ',') break;
            if (text[i] == '*') { ++i; continue; }
            if (text[i] == '1' && !saw_factor) { ++i; saw_factor = true; continue; }
            std::size_t var = alphabet.find(text[i]);
            if (var == std::string::npos)
                throw InputError("--staircase", std::string("unexpected character '") +
                                                    text[i] + "'");
            ++i;
            std::uint32_t exp = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                std::size_t start = i;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
                if (start == i) throw InputError("--staircase", "missing exponent after '^'");
                exp = static_cast<std::uint32_t>(std::stoul(text.substr(start, i - start)));
            }
            mono.emplace_back(var, exp);
            max_var = std::max(max_var, var + 1);
            saw_factor = true;
        }
        if (!saw_factor) throw InputError("--staircase", "empty monomial in list");
        raw.push_back(std::move(mono));
        if (i < text.size() && text[i] == ',') ++i;
    }
    if (raw.empty()) throw InputError("--staircase", "empty monomial list");

    n_out = std::max<std::size_t>(max_var, 1);
    std::vector<Exponent> out;
    for (const auto& mono : raw) {
        Exponent e(n_out, 0);
        for (const auto& [var, exp] : mono) e[var] += exp;
        out.push_back(std::move(e));
    }
    return out;
}

Field parse_field_flag(const std::string& tag) {
    if (tag == "rational") return Field::rationals();
    if (tag.rfind("fp:", 0) == 0) return Field::fp(std::stoull(tag.substr(3)));
    throw InputError("--field", "expected rational or fp:<prime>");
}

void write_json(const nlohmann::json& j, const std::string& path) {
    if (path.empty()) {
        std::cout << j.dump(1) << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) throw InputError(path, "cannot open for writing");
    out << j.dump(1) << "\n";
}

int cmd_compute(const std::string& engine_tag, const std::string& input,
                const std::string& output, bool stats) {
    SequenceDocument doc = load_document(read_json_file(input));
    Engine engine;
    try {
        engine = parse_engine(engine_tag);
    } catch (const std::exception& e) {
        throw InputError("--engine", e.what());
    }
    AnnihilatorResult res = annihilator(doc.family, engine);

    // self-check: every generator must actually annihilate
    for (const auto& p : res.vs_basis)
        if (!is_annihilator(p, doc.family))
            throw std::logic_error("computed generator fails the membership check: " +
                                   p.str(doc.vars));

    write_json(save_result(res, doc.vars), output);
    if (stats) {
        std::cerr << "engine=" << res.engine
                  << " s=" << doc.family.union_support.size() << " r=" << res.r
                  << " dim=" << res.vs_basis.size()
                  << " stages=" << res.stats.stages << "\n";
        for (const auto& [rows, cols] : res.stats.stage_dims)
            std::cerr << "  system " << rows << " x " << cols << "\n";
    }
    return kExitOk;
}

int cmd_gen(const std::string& staircase, std::uint64_t seed,
            const std::string& field_tag, const std::string& output) {
    std::size_t n = 0;
    std::vector<Exponent> defining = parse_monomial_list(staircase, n);
    Field field = parse_field_flag(field_tag);
    NSequence seq;
    try {
        seq = gen_random_staircase(defining, n, seed, field);
    } catch (const std::invalid_argument& e) {
        throw InputError("--staircase", e.what());
    }
    SequenceDocument doc;
    for (std::size_t v = 0; v < n; ++v)
        doc.vars.push_back(mono_str(unit_exponent(n, v)));
    doc.family = make_family(std::move(seq));
    write_json(save_document(doc), output);
    return kExitOk;
}

int cmd_bench(const std::string& suite, std::uint64_t seed) {
    Field field = Field::fp(kDefaultPrime);
    std::vector<Engine> engines = {Engine::hankel, Engine::duality, Engine::macaulay};
    std::vector<BenchCase> cases;
    if (suite == "table3-sizes") {
        cases = suite_table3();
    } else if (suite == "table3-dims") {
        for (auto& c : suite_table3())
            if (c.reported_dim) cases.push_back(std::move(c));
        for (auto& c : suite_fixed_values(field))
            if (c.reported_dim) cases.push_back(std::move(c));
    } else if (suite == "paper-examples") {
        cases = suite_paper_examples(field);
        for (auto& c : suite_fixed_values(field)) cases.push_back(std::move(c));
    } else {
        throw InputError("--suite",
                         "expected table3-sizes, table3-dims or paper-examples");
    }

    std::cout << "family\tengine\ts\tr\trows\tcols\tmillis\n";
    std::vector<BenchmarkRecord> records =
        run_bench(cases, engines, seed, field, std::cout);

    for (const auto& c : cases) {
        if (!c.reported_dim) continue;
        for (const auto& rec : records) {
            if (rec.family != c.name || rec.engine != "hankel") continue;
            std::size_t dim = rec.s - rec.r;
            if (dim != *c.reported_dim)
                std::cerr << "note: " << c.name << " dim " << dim
                          << " differs from the published value " << *c.reported_dim
                          << (c.fixture ? "" : " (random values are seed-dependent)")
                          << "\n";
        }
    }
    return kExitOk;
}

int cmd_verify(const std::string& input, const std::string& generators) {
    SequenceDocument doc = load_document(read_json_file(input));
    std::vector<Polynomial> gens =
        load_generators(read_json_file(generators), doc.family.n(), doc.family.field());
    bool all_ok = true;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool ok = is_annihilator(gens[i], doc.family);
        std::cout << "generator " << i + 1 << ": "
                  << (ok ? "annihilates" : "DOES NOT annihilate") << "  "
                  << gens[i].str(doc.vars) << "\n";
        all_ok = all_ok && ok;
    }
    return all_ok ? kExitOk : kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"annihilator ideals of n-dimensional sequences"};
    app.require_subcommand(1);

    std::string engine = "duality", input, output, staircase, field_tag = "rational";
    std::string suite, generators;
    std::uint64_t seed = 0;
    bool stats = false;

    auto* compute = app.add_subcommand("compute", "compute the annihilator of a sequence document");
    compute->add_option("--engine", engine, "hankel | duality | macaulay")
        ->default_val("duality");
    compute->add_option("--input", input, "sequence document (JSON)")->required();
    compute->add_option("--output", output, "result file (default: stdout)");
    compute->add_flag("--stats", stats, "print matrix statistics to stderr");

    auto* gen = app.add_subcommand("gen", "generate random values over a staircase support");
    gen->add_option("--staircase", staircase, "defining monomials, e.g. \"x^20,x^19*y^3,y^4\"")
        ->required();
    gen->add_option("--seed", seed, "random seed")->required();
    gen->add_option("--field", field_tag, "rational | fp:<prime>")->default_val("rational");
    gen->add_option("--output", output, "output file (default: stdout)");

    auto* bench = app.add_subcommand("bench", "run a built-in benchmark suite");
    bench->add_option("--suite", suite, "table3-sizes | table3-dims | paper-examples")
        ->required();
    bench->add_option("--seed", seed, "random seed")->default_val("42");

    auto* verify = app.add_subcommand("verify", "check generators against a sequence document");
    verify->add_option("--input", input, "sequence document (JSON)")->required();
    verify->add_option("--generators", generators, "generator file (JSON)")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed()) return cmd_compute(engine, input, output, stats);
        if (gen->parsed()) return cmd_gen(staircase, seed, field_tag, output);
        if (bench->parsed()) return cmd_bench(suite, seed);
        if (verify->parsed()) return cmd_verify(input, generators);
    } catch (const annseq::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInput;
    } catch (const annseq::EngineDisagreement& e) {
        std::cerr << e.what() << "\n";
        return kExitDisagreement;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitInternal;
}
