#include "polysft.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include <json.hpp>

#include "core/automorphism.hpp"
#include "core/constructions.hpp"
#include "core/digest.hpp"
#include "core/error.hpp"
#include "core/json_io.hpp"
#include "core/render.hpp"
#include "core/solver.hpp"

using namespace polysft;

struct psft_sft {
    Sft value;
};
struct psft_config {
    Configuration value;
};
struct psft_hom {
    Homomorphism value;
};
struct psft_tileset {
    WangTileSet value;
};

namespace {

thread_local std::string g_last_error;

psft_status to_status(ErrorCode code) {
    switch (code) {
        case ErrorCode::Usage: return PSFT_ERR_USAGE;
        case ErrorCode::Parse: return PSFT_ERR_PARSE;
        case ErrorCode::GroupMismatch: return PSFT_ERR_GROUP_MISMATCH;
        case ErrorCode::AlphabetMismatch: return PSFT_ERR_ALPHABET_MISMATCH;
        case ErrorCode::Domain: return PSFT_ERR_DOMAIN;
        case ErrorCode::Kind: return PSFT_ERR_KIND;
        case ErrorCode::Relation: return PSFT_ERR_RELATION;
        case ErrorCode::Lattice: return PSFT_ERR_LATTICE;
        case ErrorCode::Unsupported: return PSFT_ERR_UNSUPPORTED;
        case ErrorCode::Internal: return PSFT_ERR_INTERNAL;
    }
    return PSFT_ERR_INTERNAL;
}

template <typename F>
psft_status wrap(F&& f) {
    try {
        f();
        g_last_error.clear();
        return PSFT_OK;
    } catch (const Error& e) {
        g_last_error = e.what();
        return to_status(e.code());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return PSFT_ERR_INTERNAL;
    }
}

char* copy_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void require(bool ok, const char* what) {
    if (!ok) fail(ErrorCode::Usage, what);
}

} // namespace

extern "C" {

const char* psft_last_error(void) { return g_last_error.c_str(); }

void psft_string_free(char* s) { std::free(s); }
void psft_bytes_free(uint8_t* p) { std::free(p); }
void psft_sft_free(psft_sft* x) { delete x; }
void psft_config_free(psft_config* c) { delete c; }
void psft_hom_free(psft_hom* h) { delete h; }
void psft_tileset_free(psft_tileset* t) { delete t; }

uint64_t psft_digest(const void* bytes, size_t len) { return fnv1a64(bytes, len); }

psft_status psft_sft_parse(const char* json, psft_sft** out) {
    return wrap([&] {
        require(json && out, "null argument");
        *out = new psft_sft{parse_sft(json)};
    });
}

psft_status psft_sft_to_json(const psft_sft* x, char** out) {
    return wrap([&] {
        require(x && out, "null argument");
        *out = copy_string(sft_to_json(x->value));
    });
}

psft_status psft_config_parse(const char* json, psft_config** out) {
    return wrap([&] {
        require(json && out, "null argument");
        *out = new psft_config{parse_configuration(json)};
    });
}

psft_status psft_config_to_json(const psft_config* c, char** out) {
    return wrap([&] {
        require(c && out, "null argument");
        *out = copy_string(configuration_to_json(c->value));
    });
}

psft_status psft_hom_parse(const char* json, psft_hom** out) {
    return wrap([&] {
        require(json && out, "null argument");
        *out = new psft_hom{parse_hom(json)};
    });
}

psft_status psft_tileset_parse(const char* json, psft_tileset** out) {
    return wrap([&] {
        require(json && out, "null argument");
        *out = new psft_tileset{parse_tiles(json)};
    });
}

psft_status psft_quotient_lift(const psft_sft* x, const psft_hom* phi, psft_sft** out) {
    return wrap([&] {
        require(x && phi && out, "null argument");
        *out = new psft_sft{quotient_lift(x->value, phi->value)};
    });
}

psft_status psft_subgroup_induce(const psft_sft* x, const psft_hom* emb, psft_sft** out) {
    return wrap([&] {
        require(x && emb && out, "null argument");
        *out = new psft_sft{subgroup_induce(x->value, emb->value)};
    });
}

psft_status psft_product(const psft_sft* x1, const psft_sft* x2, psft_sft** out) {
    return wrap([&] {
        require(x1 && x2 && out, "null argument");
        *out = new psft_sft{product(x1->value, x2->value)};
    });
}

psft_status psft_mod3_marker(int dim, psft_sft** out) {
    return wrap([&] {
        require(out, "null argument");
        *out = new psft_sft{mod3_marker(dim)};
    });
}

psft_status psft_extend_periodic(const psft_sft* base, int dim, psft_sft** out) {
    return wrap([&] {
        require(base && out, "null argument");
        *out = new psft_sft{extend_periodic(base->value, dim)};
    });
}

psft_status psft_wang_to_sft(const psft_tileset* t, psft_sft** out) {
    return wrap([&] {
        require(t && out, "null argument");
        *out = new psft_sft{wang_to_sft(t->value)};
    });
}

psft_status psft_reduce_to_group(const psft_tileset* t, const char* chain_json, psft_sft** out) {
    return wrap([&] {
        require(t && chain_json && out, "null argument");
        *out = new psft_sft{reduce_to_group(t->value, parse_hom_chain(chain_json))};
    });
}

psft_status psft_aut_free_product(const psft_sft* base, const char* projection_json, int dim,
                                  psft_sft** out) {
    return wrap([&] {
        require(base && projection_json && out, "null argument");
        auto projection = parse_projection(projection_json, base->value.alphabet);
        *out = new psft_sft{automorphism_free_product(base->value, projection, dim)};
    });
}

psft_status psft_check_ball(const psft_sft* x, int radius, uint64_t budget,
                            psft_verdict* verdict_out, psft_config** witness_out,
                            uint64_t* nodes_out) {
    return wrap([&] {
        require(x && verdict_out, "null argument");
        EmptinessVerdict v = check_ball_emptiness(x->value, radius, budget);
        switch (v.kind) {
            case VerdictKind::Witness: *verdict_out = PSFT_VERDICT_WITNESS; break;
            case VerdictKind::EmptyAtRadius: *verdict_out = PSFT_VERDICT_EMPTY; break;
            case VerdictKind::Inconclusive: *verdict_out = PSFT_VERDICT_INCONCLUSIVE; break;
        }
        if (witness_out)
            *witness_out = v.witness.has_value() ? new psft_config{std::move(*v.witness)} : nullptr;
        if (nodes_out) *nodes_out = v.nodes;
    });
}

psft_status psft_find_periodic(const psft_sft* x, const char* lattice_text, int* found_out,
                               psft_config** witness_out, uint64_t* nodes_out) {
    return wrap([&] {
        require(x && lattice_text && found_out, "null argument");
        Lattice l = Lattice::from_text(lattice_text,
                                       x->value.group->family == GroupFamily::FreeAbelian
                                           ? x->value.group->rank
                                           : 0);
        auto r = find_periodic(x->value, l);
        *found_out = r.witness.has_value() ? 1 : 0;
        if (witness_out)
            *witness_out = r.witness.has_value() ? new psft_config{std::move(*r.witness)} : nullptr;
        if (nodes_out) *nodes_out = r.nodes;
    });
}

psft_status psft_count_torus(const psft_sft* x, const char* lattice_text, uint64_t* count_out) {
    return wrap([&] {
        require(x && lattice_text && count_out, "null argument");
        Lattice l = Lattice::from_text(lattice_text,
                                       x->value.group->family == GroupFamily::FreeAbelian
                                           ? x->value.group->rank
                                           : 0);
        *count_out = count_torus(x->value, l);
    });
}

psft_status psft_search_periods(const psft_sft* x, int64_t max_index, char** report_json_out) {
    return wrap([&] {
        require(x && report_json_out, "null argument");
        auto entries = search_periods(x->value, max_index);
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& e : entries) {
            nlohmann::json item{{"lattice", e.lattice.to_text()},
                                {"index", e.lattice.index()},
                                {"found", e.witness.has_value()},
                                {"nodes", e.nodes}};
            if (e.witness.has_value())
                item["witness"] = nlohmann::json::parse(configuration_to_json(*e.witness));
            arr.push_back(std::move(item));
        }
        *report_json_out = copy_string(arr.dump());
    });
}

psft_status psft_stabilizer(const psft_config* c, char** lattice_text_out) {
    return wrap([&] {
        require(c && lattice_text_out, "null argument");
        *lattice_text_out = copy_string(stabilizer(c->value).to_text());
    });
}

psft_status psft_export_cnf(const psft_sft* x, int radius, char** dimacs_out) {
    return wrap([&] {
        require(x && dimacs_out, "null argument");
        *dimacs_out = copy_string(export_cnf(x->value, radius));
    });
}

psft_status psft_aut_check(const psft_sft* x, const psft_config* c, const char* matrix_spec,
                           int* refuted_out) {
    return wrap([&] {
        require(x && c && matrix_spec && refuted_out, "null argument");
        AutMatrix m = parse_aut_matrix(matrix_spec);
        *refuted_out = div_witness_check(x->value, c->value, m) == DivCheck::Refuted ? 1 : 0;
    });
}

psft_status psft_render_text(const psft_config* c, char** out) {
    return wrap([&] {
        require(c && out, "null argument");
        *out = copy_string(render_text(c->value));
    });
}

psft_status psft_render_pgm(const psft_config* c, uint8_t** bytes_out, size_t* len_out) {
    return wrap([&] {
        require(c && bytes_out && len_out, "null argument");
        auto bytes = render_pgm(c->value);
        auto* buf = static_cast<uint8_t*>(std::malloc(bytes.size()));
        std::memcpy(buf, bytes.data(), bytes.size());
        *bytes_out = buf;
        *len_out = bytes.size();
    });
}

} // extern "C"
