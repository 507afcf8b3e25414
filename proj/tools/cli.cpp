// Command-line front end. Talks to the library exclusively through the
// public C API in polysft.h.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "polysft.h"

namespace {

using nlohmann::json;

constexpr int kExitWitness = 0;
constexpr int kExitEmpty = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;
constexpr int kExitBadInput = 65;

struct CliError {
    int exit_code;
    std::string message;
};

[[noreturn]] void die(int code, const std::string& message) { throw CliError{code, message}; }

// File-content failures map to 65, bad flag values to 64.
[[noreturn]] void die_api(psft_status status, bool from_file) {
    std::string msg = psft_last_error();
    if (from_file) die(kExitBadInput, msg);
    switch (status) {
        case PSFT_ERR_USAGE:
        case PSFT_ERR_PARSE:
        case PSFT_ERR_DOMAIN:
            die(kExitUsage, msg);
        default:
            die(kExitBadInput, msg);
    }
}

void check_api(psft_status status, bool from_file = false) {
    if (status != PSFT_OK) die_api(status, from_file);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) die(kExitBadInput, "cannot read input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string digest_hex(const std::string& content) {
    uint64_t h = psft_digest(content.data(), content.size());
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

struct OwnedString {
    char* ptr = nullptr;
    ~OwnedString() { psft_string_free(ptr); }
    std::string str() const { return ptr ? ptr : ""; }
};

template <typename T, void (*Free)(T*)>
struct Handle {
    T* ptr = nullptr;
    Handle() = default;
    Handle(const Handle&) = delete;
    Handle& operator=(const Handle&) = delete;
    ~Handle() { Free(ptr); }
};

using SftHandle = Handle<psft_sft, psft_sft_free>;
using ConfigHandle = Handle<psft_config, psft_config_free>;
using HomHandle = Handle<psft_hom, psft_hom_free>;
using TilesHandle = Handle<psft_tileset, psft_tileset_free>;

struct Invocation {
    std::vector<std::string> argv;
    json inputs = json::object();
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    bool timings = false;

    std::string load(const std::string& path) {
        std::string content = read_file(path);
        inputs[path] = digest_hex(content);
        return content;
    }

    json report() const {
        json r{{"command", argv}, {"inputs", inputs}};
        return r;
    }

    void emit(json r) const {
        if (timings) {
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
            r["wall_ms"] = ms;
        }
        std::cout << r.dump() << "\n";
    }
};

void load_sft(Invocation& inv, const std::string& path, SftHandle& out) {
    check_api(psft_sft_parse(inv.load(path).c_str(), &out.ptr), true);
}

void load_config(Invocation& inv, const std::string& path, ConfigHandle& out) {
    check_api(psft_config_parse(inv.load(path).c_str(), &out.ptr), true);
}

void print_sft(const psft_sft* x) {
    OwnedString s;
    check_api(psft_sft_to_json(x, &s.ptr));
    std::cout << s.str() << "\n";
}

json witness_json(const psft_config* c) {
    if (!c) return nullptr;
    OwnedString s;
    check_api(psft_config_to_json(c, &s.ptr));
    return json::parse(s.str());
}

int cmd_check(Invocation& inv, const std::string& sft_path, int radius, uint64_t budget) {
    SftHandle x;
    load_sft(inv, sft_path, x);
    psft_verdict verdict;
    ConfigHandle witness;
    uint64_t nodes = 0;
    check_api(psft_check_ball(x.ptr, radius, budget, &verdict, &witness.ptr, &nodes));
    json r = inv.report();
    r["radius"] = radius;
    r["budget"] = budget ? budget : 10000000ULL;
    r["nodes"] = nodes;
    r["verdict"] = verdict == PSFT_VERDICT_WITNESS   ? "witness"
                   : verdict == PSFT_VERDICT_EMPTY   ? "empty"
                                                     : "inconclusive";
    r["witness"] = witness_json(witness.ptr);
    inv.emit(r);
    return verdict == PSFT_VERDICT_WITNESS ? kExitWitness
           : verdict == PSFT_VERDICT_EMPTY ? kExitEmpty
                                           : kExitInconclusive;
}

int cmd_periodic(Invocation& inv, const std::string& sft_path, const std::string& lattice) {
    SftHandle x;
    load_sft(inv, sft_path, x);
    int found = 0;
    ConfigHandle witness;
    uint64_t nodes = 0;
    check_api(psft_find_periodic(x.ptr, lattice.c_str(), &found, &witness.ptr, &nodes));
    json r = inv.report();
    r["lattice"] = lattice;
    r["found"] = found != 0;
    r["nodes"] = nodes;
    r["witness"] = witness_json(witness.ptr);
    inv.emit(r);
    return found ? kExitWitness : kExitEmpty;
}

int cmd_search_periods(Invocation& inv, const std::string& sft_path, int64_t max_index) {
    SftHandle x;
    load_sft(inv, sft_path, x);
    OwnedString report;
    check_api(psft_search_periods(x.ptr, max_index, &report.ptr));
    json lattices = json::parse(report.str());
    bool any = false;
    for (const auto& e : lattices)
        if (e.at("found").get<bool>()) any = true;
    json r = inv.report();
    r["max_index"] = max_index;
    r["lattices"] = lattices;
    r["found_any"] = any;
    inv.emit(r);
    return any ? kExitWitness : kExitEmpty;
}

int cmd_stabilizer(Invocation& inv, const std::string& config_path) {
    ConfigHandle c;
    load_config(inv, config_path, c);
    OwnedString text;
    check_api(psft_stabilizer(c.ptr, &text.ptr));
    json r = inv.report();
    r["stabilizer"] = text.str();
    inv.emit(r);
    return kExitWitness;
}

int cmd_lift(Invocation& inv, const std::string& sft_path, const std::string& hom_path) {
    SftHandle x;
    load_sft(inv, sft_path, x);
    HomHandle h;
    check_api(psft_hom_parse(inv.load(hom_path).c_str(), &h.ptr), true);
    SftHandle out;
    check_api(psft_quotient_lift(x.ptr, h.ptr, &out.ptr));
    print_sft(out.ptr);
    return kExitWitness;
}

int cmd_induce(Invocation& inv, const std::string& sft_path, const std::string& hom_path) {
    SftHandle x;
    load_sft(inv, sft_path, x);
    HomHandle h;
    check_api(psft_hom_parse(inv.load(hom_path).c_str(), &h.ptr), true);
    SftHandle out;
    check_api(psft_subgroup_induce(x.ptr, h.ptr, &out.ptr));
    print_sft(out.ptr);
    return kExitWitness;
}

int cmd_product(Invocation& inv, const std::string& path1, const std::string& path2) {
    SftHandle x1, x2;
    load_sft(inv, path1, x1);
    load_sft(inv, path2, x2);
    SftHandle out;
    check_api(psft_product(x1.ptr, x2.ptr, &out.ptr));
    print_sft(out.ptr);
    return kExitWitness;
}

int cmd_mod3(int dim) {
    SftHandle out;
    check_api(psft_mod3_marker(dim, &out.ptr));
    print_sft(out.ptr);
    return kExitWitness;
}

int cmd_extend_periodic(Invocation& inv, const std::string& sft_path, int dim) {
    SftHandle x;
    load_sft(inv, sft_path, x);
    SftHandle out;
    check_api(psft_extend_periodic(x.ptr, dim, &out.ptr));
    print_sft(out.ptr);
    return kExitWitness;
}

int cmd_aut_free(Invocation& inv, const std::string& sft_path, const std::string& proj_path,
                 int dim) {
    SftHandle x;
    load_sft(inv, sft_path, x);
    std::string proj = inv.load(proj_path);
    SftHandle out;
    check_api(psft_aut_free_product(x.ptr, proj.c_str(), dim, &out.ptr), true);
    print_sft(out.ptr);
    return kExitWitness;
}

int cmd_wang(Invocation& inv, const std::string& tiles_path) {
    TilesHandle t;
    check_api(psft_tileset_parse(inv.load(tiles_path).c_str(), &t.ptr), true);
    SftHandle out;
    check_api(psft_wang_to_sft(t.ptr, &out.ptr));
    print_sft(out.ptr);
    return kExitWitness;
}

int cmd_reduce(Invocation& inv, const std::string& tiles_path, const std::string& chain_path) {
    TilesHandle t;
    check_api(psft_tileset_parse(inv.load(tiles_path).c_str(), &t.ptr), true);
    std::string chain = inv.load(chain_path);
    SftHandle out;
    check_api(psft_reduce_to_group(t.ptr, chain.c_str(), &out.ptr), true);
    print_sft(out.ptr);
    return kExitWitness;
}

int cmd_aut_check(Invocation& inv, const std::string& sft_path, const std::string& config_path,
                  const std::string& matrix, const std::string& matrix_file) {
    SftHandle x;
    load_sft(inv, sft_path, x);
    ConfigHandle c;
    load_config(inv, config_path, c);
    std::string spec = matrix;
    bool from_file = false;
    if (!matrix_file.empty()) {
        spec = inv.load(matrix_file);
        from_file = true;
    }
    int refuted = 0;
    check_api(psft_aut_check(x.ptr, c.ptr, spec.c_str(), &refuted), from_file);
    json r = inv.report();
    r["result"] = refuted ? "refuted" : "consistent";
    inv.emit(r);
    return refuted ? kExitEmpty : kExitWitness;
}

int cmd_render(Invocation& inv, const std::string& config_path, const std::string& format) {
    ConfigHandle c;
    load_config(inv, config_path, c);
    if (format == "text") {
        OwnedString s;
        check_api(psft_render_text(c.ptr, &s.ptr));
        std::cout << s.str();
        return kExitWitness;
    }
    uint8_t* bytes = nullptr;
    size_t len = 0;
    check_api(psft_render_pgm(c.ptr, &bytes, &len));
    std::fwrite(bytes, 1, len, stdout);
    psft_bytes_free(bytes);
    return kExitWitness;
}

int cmd_export_cnf(Invocation& inv, const std::string& sft_path, int radius) {
    SftHandle x;
    load_sft(inv, sft_path, x);
    OwnedString s;
    check_api(psft_export_cnf(x.ptr, radius, &s.ptr));
    std::cout << s.str();
    return kExitWitness;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"subshifts of finite type on finitely generated groups"};
    app.require_subcommand(1);

    std::string sft_path, sft_path2, config_path, hom_path, tiles_path, chain_path, proj_path;
    std::string lattice, matrix, matrix_file, format = "text";
    int radius = 0, dim = 2;
    int64_t max_index = 1;
    uint64_t budget = 0;
    bool timings = false;
    app.add_flag("--timings", timings, "append wall-clock time to reports");

    auto* check = app.add_subcommand("check", "bounded emptiness check on a Cayley ball");
    check->add_option("sft", sft_path)->required();
    check->add_option("--radius", radius)->required();
    check->add_option("--budget", budget);

    auto* periodic = app.add_subcommand("periodic", "search for a torus-periodic configuration");
    periodic->add_option("sft", sft_path)->required();
    periodic->add_option("--lattice", lattice)->required();

    auto* search = app.add_subcommand("search-periods", "periodic search over all small lattices");
    search->add_option("sft", sft_path)->required();
    search->add_option("--max-index", max_index)->required();

    auto* stab = app.add_subcommand("stabilizer", "stabilizer lattice of a torus configuration");
    stab->add_option("config", config_path)->required();

    auto* lift = app.add_subcommand("lift", "lift an SFT through a quotient homomorphism");
    lift->add_option("sft", sft_path)->required();
    lift->add_option("--hom", hom_path)->required();

    auto* induce = app.add_subcommand("induce", "push an SFT along a subgroup embedding");
    induce->add_option("sft", sft_path)->required();
    induce->add_option("--hom", hom_path)->required();

    auto* prod = app.add_subcommand("product", "componentwise product of two SFTs");
    prod->add_option("sft1", sft_path)->required();
    prod->add_option("sft2", sft_path2)->required();

    auto* mod3 = app.add_subcommand("mod3", "mod-3 marker SFT on Z^n");
    mod3->add_option("--dim", dim)->required();

    auto* extend = app.add_subcommand("extend-periodic", "extend a Z^2 SFT periodically to Z^n");
    extend->add_option("sft", sft_path)->required();
    extend->add_option("--dim", dim)->required();

    auto* autfree = app.add_subcommand("aut-free-product",
                                       "product of reoriented extensions with the mod-3 marker");
    autfree->add_option("sft", sft_path)->required();
    autfree->add_option("--projection", proj_path)->required();
    autfree->add_option("--dim", dim)->required();

    auto* wang = app.add_subcommand("wang", "nearest-neighbour SFT of a Wang tile set");
    wang->add_option("tiles", tiles_path)->required();

    auto* reduce = app.add_subcommand("reduce", "apply a lift/induce chain to a Wang SFT");
    reduce->add_option("tiles", tiles_path)->required();
    reduce->add_option("--chain", chain_path)->required();

    auto* autcheck = app.add_subcommand("aut-check", "test a configuration against an automorphism");
    autcheck->add_option("sft", sft_path)->required();
    autcheck->add_option("config", config_path)->required();
    autcheck->add_option("--matrix", matrix);
    autcheck->add_option("--matrix-file", matrix_file);

    auto* render = app.add_subcommand("render", "render a configuration");
    render->add_option("config", config_path)->required();
    render->add_option("--format", format)->check(CLI::IsMember({"text", "pgm"}));

    auto* cnf = app.add_subcommand("export-cnf", "DIMACS CNF of the ball coloring problem");
    cnf->add_option("sft", sft_path)->required();
    cnf->add_option("--radius", radius)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    Invocation inv;
    for (int i = 1; i < argc; ++i) inv.argv.push_back(argv[i]);
    inv.timings = timings;

    try {
        if (app.got_subcommand(check)) return cmd_check(inv, sft_path, radius, budget);
        if (app.got_subcommand(periodic)) return cmd_periodic(inv, sft_path, lattice);
        if (app.got_subcommand(search)) return cmd_search_periods(inv, sft_path, max_index);
        if (app.got_subcommand(stab)) return cmd_stabilizer(inv, config_path);
        if (app.got_subcommand(lift)) return cmd_lift(inv, sft_path, hom_path);
        if (app.got_subcommand(induce)) return cmd_induce(inv, sft_path, hom_path);
        if (app.got_subcommand(prod)) return cmd_product(inv, sft_path, sft_path2);
        if (app.got_subcommand(mod3)) return cmd_mod3(dim);
        if (app.got_subcommand(extend)) return cmd_extend_periodic(inv, sft_path, dim);
        if (app.got_subcommand(autfree)) return cmd_aut_free(inv, sft_path, proj_path, dim);
        if (app.got_subcommand(wang)) return cmd_wang(inv, tiles_path);
        if (app.got_subcommand(reduce)) return cmd_reduce(inv, tiles_path, chain_path);
        if (app.got_subcommand(autcheck)) {
            if (matrix.empty() && matrix_file.empty())
                die(kExitUsage, "aut-check needs --matrix or --matrix-file");
            return cmd_aut_check(inv, sft_path, config_path, matrix, matrix_file);
        }
        if (app.got_subcommand(render)) return cmd_render(inv, config_path, format);
        if (app.got_subcommand(cnf)) return cmd_export_cnf(inv, sft_path, radius);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.exit_code;
    }
    return kExitUsage;
}
