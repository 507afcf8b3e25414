#include "core/constructions.hpp"

#include <algorithm>
#include <map>

#include "core/error.hpp"

namespace polysft {

namespace {

// Fixed section of a quotient map: write q as its canonical generator word and
// replace each target generator by the first source generator mapping onto it.
class Section {
public:
    explicit Section(const Homomorphism& phi) : phi_(phi) {
        int tgens = phi.target->generator_count();
        lifts_.reserve(tgens);
        for (int j = 0; j < tgens; ++j) {
            GroupElement want = generator(phi.target, j);
            int found = -1;
            for (int i = 0; i < phi.source->generator_count(); ++i)
                if (phi.images[i] == want) { found = i; break; }
            if (found < 0)
                fail(ErrorCode::Relation,
                     "quotient section needs every target generator to be a generator image");
            lifts_.push_back(generator(phi.source, found));
        }
    }

    GroupElement operator()(const GroupElement& q) const {
        auto word = canonical_word(q);
        GroupElement out = identity_element(phi_.source);
        for (std::size_t j = 0; j < word.size(); ++j)
            if (word[j] != 0) out = multiply(out, power(lifts_[j], word[j]));
        return out;
    }

private:
    const Homomorphism& phi_;
    std::vector<GroupElement> lifts_;
};

std::vector<Pattern> constancy_patterns(const GroupPtr& g, const Alphabet& alphabet,
                                        const GroupElement& direction) {
    std::vector<Pattern> out;
    GroupElement origin = identity_element(g);
    for (int a = 0; a < alphabet.size(); ++a)
        for (int b = 0; b < alphabet.size(); ++b)
            if (a != b) out.push_back(make_pattern(g, {{origin, a}, {direction, b}}));
    return out;
}

} // namespace

Sft quotient_lift(const Sft& x, const Homomorphism& phi) {
    if (phi.kind != HomKind::Quotient) fail(ErrorCode::Kind, "quotient_lift requires a Quotient homomorphism");
    if (!(*x.group == *phi.target)) fail(ErrorCode::GroupMismatch, "sft group must be the quotient target");
    if (!check_hom(phi)) fail(ErrorCode::Relation, "homomorphism violates a defining relation");
    Section section(phi);
    std::vector<Pattern> forbidden;
    for (const auto& p : x.forbidden) {
        std::vector<PatternEntry> lifted;
        lifted.reserve(p.entries.size());
        for (const auto& e : p.entries) lifted.push_back({section(e.cell), e.symbol});
        forbidden.push_back(make_pattern(phi.source, std::move(lifted)));
    }
    for (const auto& k : phi.kernel_generators) {
        if (is_identity(k)) fail(ErrorCode::Usage, "kernel generator must be nontrivial");
        auto constancy = constancy_patterns(phi.source, x.alphabet, k);
        forbidden.insert(forbidden.end(), constancy.begin(), constancy.end());
    }
    return make_sft(phi.source, x.alphabet, std::move(forbidden));
}

Sft subgroup_induce(const Sft& x, const Homomorphism& emb) {
    if (emb.kind != HomKind::Embedding) fail(ErrorCode::Kind, "subgroup_induce requires an Embedding homomorphism");
    if (!(*x.group == *emb.source)) fail(ErrorCode::GroupMismatch, "sft group must be the embedding source");
    if (!check_hom(emb)) fail(ErrorCode::Relation, "homomorphism violates a defining relation");
    // Injectivity on the ball covering every pattern support.
    int radius = max_support_radius(x);
    std::map<IntVec, IntVec> image_of;
    for (const auto& e : ball(emb.source, radius)) {
        GroupElement img = apply_hom(emb, e);
        auto [it, fresh] = image_of.emplace(img.coords, e.coords);
        if (!fresh && it->second != e.coords)
            fail(ErrorCode::Relation, "embedding is not injective on the support ball");
    }
    std::vector<Pattern> forbidden;
    for (const auto& p : x.forbidden) {
        std::vector<PatternEntry> mapped;
        mapped.reserve(p.entries.size());
        for (const auto& e : p.entries) mapped.push_back({apply_hom(emb, e.cell), e.symbol});
        for (std::size_t i = 0; i < mapped.size(); ++i)
            for (std::size_t j = i + 1; j < mapped.size(); ++j)
                if (mapped[i].cell == mapped[j].cell)
                    fail(ErrorCode::Relation, "two support elements collide under the embedding");
        forbidden.push_back(make_pattern(emb.target, std::move(mapped)));
    }
    return make_sft(emb.target, x.alphabet, std::move(forbidden));
}

Sft product(const Sft& x1, const Sft& x2) {
    if (!(*x1.group == *x2.group)) fail(ErrorCode::GroupMismatch, "product factors must share a group");
    int k1 = x1.alphabet.size(), k2 = x2.alphabet.size();
    std::vector<std::string> symbols;
    symbols.reserve(static_cast<std::size_t>(k1) * k2);
    for (int a = 0; a < k1; ++a)
        for (int b = 0; b < k2; ++b)
            symbols.push_back(x1.alphabet.symbols[a] + "|" + x2.alphabet.symbols[b]);
    Alphabet alphabet = make_alphabet(std::move(symbols));

    std::vector<Pattern> forbidden;
    auto lift_patterns = [&](const Sft& x, bool first_factor) {
        int other = first_factor ? k2 : k1;
        for (const auto& p : x.forbidden) {
            std::size_t cells = p.entries.size();
            std::vector<int> pick(cells, 0); // odometer over the free factor
            while (true) {
                std::vector<PatternEntry> entries;
                entries.reserve(cells);
                for (std::size_t m = 0; m < cells; ++m) {
                    int combined = first_factor ? p.entries[m].symbol * k2 + pick[m]
                                                : pick[m] * k2 + p.entries[m].symbol;
                    entries.push_back({p.entries[m].cell, combined});
                }
                forbidden.push_back(make_pattern(x1.group, std::move(entries)));
                std::size_t i = cells;
                while (i > 0 && pick[i - 1] + 1 == other) pick[--i] = 0;
                if (i == 0) break;
                ++pick[i - 1];
            }
        }
    };
    lift_patterns(x1, true);
    lift_patterns(x2, false);
    return make_sft(x1.group, std::move(alphabet), std::move(forbidden));
}

Sft mod3_marker(int n) {
    if (n < 1) fail(ErrorCode::Usage, "mod3_marker requires n >= 1");
    GroupPtr g = make_free_abelian(n);
    int count = 1;
    for (int i = 0; i < n; ++i) count *= 3;
    std::vector<std::string> symbols;
    symbols.reserve(count);
    for (int s = 0; s < count; ++s) {
        std::string name(n, '0');
        int v = s;
        for (int i = n - 1; i >= 0; --i) { name[i] = static_cast<char>('0' + v % 3); v /= 3; }
        symbols.push_back(std::move(name));
    }
    // successor along axis i: increment digit i mod 3
    auto successor = [&](int sym, int axis) {
        int place = 1;
        for (int i = n - 1; i > axis; --i) place *= 3;
        int digit = (sym / place) % 3;
        return sym - digit * place + ((digit + 1) % 3) * place;
    };
    GroupElement origin = identity_element(g);
    std::vector<Pattern> forbidden;
    for (int axis = 0; axis < n; ++axis) {
        GroupElement step = generator(g, axis);
        for (int a = 0; a < count; ++a) {
            int allowed = successor(a, axis);
            for (int b = 0; b < count; ++b)
                if (b != allowed) forbidden.push_back(make_pattern(g, {{origin, a}, {step, b}}));
        }
    }
    return make_sft(g, make_alphabet(std::move(symbols)), std::move(forbidden));
}

Sft extend_periodic(const Sft& y, int n) {
    if (y.group->family != GroupFamily::FreeAbelian || y.group->rank != 2)
        fail(ErrorCode::Usage, "extend_periodic requires a base SFT on free_abelian rank 2");
    if (n < 2) fail(ErrorCode::Usage, "extend_periodic requires n >= 2");
    if (n == 2) return y;
    GroupPtr g = make_free_abelian(n);
    std::vector<Pattern> forbidden;
    for (const auto& p : y.forbidden) {
        std::vector<PatternEntry> entries;
        entries.reserve(p.entries.size());
        for (const auto& e : p.entries) {
            IntVec coords(n, 0);
            coords[0] = e.cell.coords[0];
            coords[1] = e.cell.coords[1];
            entries.push_back({make_element(g, std::move(coords)), e.symbol});
        }
        forbidden.push_back(make_pattern(g, std::move(entries)));
    }
    for (int axis = 2; axis < n; ++axis) {
        auto constancy = constancy_patterns(g, y.alphabet, generator(g, axis));
        forbidden.insert(forbidden.end(), constancy.begin(), constancy.end());
    }
    return make_sft(g, y.alphabet, std::move(forbidden));
}

namespace {

// Axis assignment sending the base plane (e1,e2) to (e_i, e_{i mod n + 1});
// remaining axes keep their relative order.
std::vector<int> plane_permutation(int i, int n) {
    std::vector<int> perm(n, -1);
    perm[0] = i;
    perm[1] = (i + 1) % n;
    std::vector<bool> used(n, false);
    used[perm[0]] = used[perm[1]] = true;
    int next = 0;
    for (int j = 2; j < n; ++j) {
        while (used[next]) ++next;
        perm[j] = next;
        used[next] = true;
    }
    return perm;
}

Sft permute_axes(const Sft& x, const std::vector<int>& perm) {
    int n = static_cast<int>(perm.size());
    std::vector<Pattern> forbidden;
    forbidden.reserve(x.forbidden.size());
    for (const auto& p : x.forbidden) {
        std::vector<PatternEntry> entries;
        entries.reserve(p.entries.size());
        for (const auto& e : p.entries) {
            IntVec coords(n, 0);
            for (int j = 0; j < n; ++j) coords[perm[j]] = e.cell.coords[j];
            entries.push_back({make_element(x.group, std::move(coords)), e.symbol});
        }
        forbidden.push_back(make_pattern(x.group, std::move(entries)));
    }
    return make_sft(x.group, x.alphabet, std::move(forbidden));
}

} // namespace

Sft automorphism_free_product(const Sft& base, const std::vector<int>& projection, int n) {
    if (base.group->family != GroupFamily::FreeAbelian || base.group->rank != 2)
        fail(ErrorCode::Usage, "automorphism_free_product requires a base SFT on free_abelian rank 2");
    if (n < 2) fail(ErrorCode::Usage, "automorphism_free_product requires n >= 2");
    if (static_cast<int>(projection.size()) != base.alphabet.size())
        fail(ErrorCode::Relation, "projection must cover the whole base alphabet");
    for (int bit : projection)
        if (bit != 0 && bit != 1) fail(ErrorCode::Relation, "projection values must be 0 or 1");
    Sft extended = extend_periodic(base, n);
    Sft acc = permute_axes(extended, plane_permutation(0, n));
    for (int i = 1; i < n; ++i)
        acc = product(acc, permute_axes(extended, plane_permutation(i, n)));
    acc = product(acc, mod3_marker(n));
    acc.product_tag = Sft::ProductTag{n, base.alphabet.symbols, projection};
    return acc;
}

Sft reduce_to_group(const WangTileSet& t, const std::vector<Homomorphism>& chain) {
    Sft cur = wang_to_sft(t);
    for (const auto& h : chain) {
        switch (h.kind) {
            case HomKind::Quotient:
                if (!(*cur.group == *h.target))
                    fail(ErrorCode::Kind, "chain type mismatch: quotient target differs from current group");
                cur = quotient_lift(cur, h);
                break;
            case HomKind::Embedding:
                if (!(*cur.group == *h.source))
                    fail(ErrorCode::Kind, "chain type mismatch: embedding source differs from current group");
                cur = subgroup_induce(cur, h);
                break;
            case HomKind::General:
                fail(ErrorCode::Kind, "chain homomorphisms must be Quotient or Embedding");
        }
    }
    return cur;
}

bool projection_columns_monochromatic(const Sft& x, const Configuration& c) {
    if (!x.product_tag.has_value())
        fail(ErrorCode::Usage, "sft carries no projection metadata");
    const auto& tag = *x.product_tag;
    if (!(x.alphabet == c.alphabet)) fail(ErrorCode::AlphabetMismatch, "configuration alphabet differs");
    auto base_bit = [&](int sym) {
        const std::string& name = x.alphabet.symbols[sym];
        std::string head = name.substr(0, name.find('|'));
        for (std::size_t i = 0; i < tag.base_alphabet.size(); ++i)
            if (tag.base_alphabet[i] == head) return tag.projection[i];
        fail(ErrorCode::Internal, "product symbol without base component");
    };
    GroupElement e2 = generator(c.group, 1);
    if (c.is_torus()) {
        const Lattice& l = c.torus_lattice();
        for (const auto& r : l.residues()) {
            int here = c.values[l.residue_index(r)];
            int up = *value_at(c, GroupElement{c.group, l.reduce(vec_add(r, e2.coords))});
            if (base_bit(here) != base_bit(up)) return false;
        }
        return true;
    }
    for (std::size_t i = 0; i < c.ball_elements().size(); ++i) {
        const GroupElement& g = c.ball_elements()[i];
        auto up = value_at(c, multiply(g, e2));
        if (up.has_value() && base_bit(c.values[i]) != base_bit(*up)) return false;
    }
    return true;
}

} // namespace polysft
