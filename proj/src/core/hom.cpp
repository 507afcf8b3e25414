#include "core/hom.hpp"

#include "core/error.hpp"

namespace polysft {

Homomorphism make_hom(GroupPtr source, GroupPtr target, std::vector<GroupElement> images,
                      HomKind kind, std::vector<GroupElement> kernel_generators) {
    if (static_cast<int>(images.size()) != source->generator_count())
        fail(ErrorCode::Usage, "homomorphism needs one image per source generator");
    for (const auto& img : images)
        if (!(*img.group == *target)) fail(ErrorCode::GroupMismatch, "image not in target group");
    if (kind == HomKind::Quotient && kernel_generators.empty())
        fail(ErrorCode::Kind, "quotient homomorphism requires kernel generators");
    for (const auto& k : kernel_generators)
        if (!(*k.group == *source)) fail(ErrorCode::GroupMismatch, "kernel generator not in source group");
    return Homomorphism{std::move(source), std::move(target), std::move(images), kind,
                        std::move(kernel_generators)};
}

std::vector<std::int64_t> canonical_word(const GroupElement& a) {
    const auto& g = *a.group;
    switch (g.family) {
        case GroupFamily::FreeAbelian:
            return std::vector<std::int64_t>(a.coords.begin(), a.coords.end());
        case GroupFamily::Heisenberg3: {
            // (x,y,z) = a^x b^y c^(z - x*y)
            std::int64_t x = a.coords[0], y = a.coords[1], z = a.coords[2];
            return {x, y, z - x * y};
        }
        case GroupFamily::SemidirectZnByZ:
            // (v,t) = e1^v1 ... en^vn t^t
            return std::vector<std::int64_t>(a.coords.begin(), a.coords.end());
    }
    fail(ErrorCode::Internal, "unknown group family");
}

GroupElement apply_hom(const Homomorphism& h, const GroupElement& a) {
    if (!(*a.group == *h.source)) fail(ErrorCode::GroupMismatch, "element not in homomorphism source");
    auto word = canonical_word(a);
    GroupElement out = identity_element(h.target);
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (word[i] == 0) continue;
        out = multiply(out, power(h.images[i], word[i]));
    }
    return out;
}

static bool commute(const GroupElement& a, const GroupElement& b) {
    return multiply(a, b) == multiply(b, a);
}

bool check_hom(const Homomorphism& h) {
    const auto& imgs = h.images;
    switch (h.source->family) {
        case GroupFamily::FreeAbelian: {
            for (std::size_t i = 0; i < imgs.size(); ++i)
                for (std::size_t j = i + 1; j < imgs.size(); ++j)
                    if (!commute(imgs[i], imgs[j])) return false;
            break;
        }
        case GroupFamily::Heisenberg3: {
            // [a,b] = c with c central among the images
            GroupElement comm = multiply(multiply(inverse(imgs[0]), inverse(imgs[1])),
                                         multiply(imgs[0], imgs[1]));
            if (!(comm == imgs[2])) return false;
            if (!commute(imgs[2], imgs[0]) || !commute(imgs[2], imgs[1])) return false;
            break;
        }
        case GroupFamily::SemidirectZnByZ: {
            int n = h.source->rank;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (!commute(imgs[i], imgs[j])) return false;
            const auto& m = h.source->twist;
            for (int i = 0; i < n; ++i) {
                GroupElement lhs = multiply(multiply(imgs[n], imgs[i]), inverse(imgs[n]));
                GroupElement rhs = identity_element(h.target);
                for (int j = 0; j < n; ++j)
                    if (m[j][i] != 0) rhs = multiply(rhs, power(imgs[j], m[j][i]));
                if (!(lhs == rhs)) return false;
            }
            break;
        }
    }
    if (h.kind == HomKind::Quotient) {
        for (const auto& k : h.kernel_generators)
            if (!is_identity(apply_hom(h, k))) return false;
    }
    return true;
}

} // namespace polysft
