#include "trisub/subdivision.hpp"

#include <algorithm>
#include <cmath>

#include "trisub/error.hpp"
#include "trisub/format.hpp"
#include "trisub/hyptrig.hpp"
#include "trisub/kernels.hpp"
#include "trisub/plane_model.hpp"

namespace trisub::subdivision {

EdgeLengths child_edges(Letter l, const EdgeLengths& e) {
    const hyptrig::MedialData md = hyptrig::medial_data(e);
    switch (l) {
        case Letter::A: return {md.m_a(), e.b / 2, e.c / 2};
        case Letter::B: return {e.a / 2, md.m_b(), e.c / 2};
        case Letter::C: return {e.a / 2, e.b / 2, md.m_c()};
        case Letter::M: return {md.m_a(), md.m_b(), md.m_c()};
    }
    return e;
}

ShapeRecord apply(Letter l, const ShapeRecord& s) {
    if (s.is_euclidean()) {
        return s;
    }
    return shape_from_edges(child_edges(l, *s.edges));
}

namespace {

using plane_model::HPoint;

std::array<HPoint, 3> child_vertices(Letter l, const plane_model::PlacedTriangle& t, const HPoint& ma,
                                     const HPoint& mb, const HPoint& mc) {
    switch (l) {
        case Letter::A: return {t.p_a, mc, mb};
        case Letter::B: return {mc, t.p_b, ma};
        case Letter::C: return {mb, ma, t.p_c};
        case Letter::M: return {ma, mb, mc};
    }
    return {t.p_a, t.p_b, t.p_c};
}

}  // namespace

EdgeLengths apply_oracle(Letter l, const EdgeLengths& e) {
    const plane_model::PlacedTriangle t = plane_model::place(e);
    const HPoint ma = plane_model::midpoint(t.p_b, t.p_c);
    const HPoint mb = plane_model::midpoint(t.p_c, t.p_a);
    const HPoint mc = plane_model::midpoint(t.p_a, t.p_b);
    const auto v = child_vertices(l, t, ma, mb, mc);
    return plane_model::measure({v[0], v[1], v[2]});
}

std::vector<EdgeLengths> apply_oracle_batch(Letter l, std::span<const EdgeLengths> edges) {
    const std::size_t n = edges.size();
    kernels::PointSet pa(n), pb(n), pc(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto t = plane_model::place(edges[i]);
        pa.set(i, t.p_a);
        pb.set(i, t.p_b);
        pc.set(i, t.p_c);
    }
    kernels::PointSet ma, mb, mc;
    kernels::midpoints(pb, pc, ma);
    kernels::midpoints(pc, pa, mb);
    kernels::midpoints(pa, pb, mc);

    const kernels::PointSet* v0 = nullptr;
    const kernels::PointSet* v1 = nullptr;
    const kernels::PointSet* v2 = nullptr;
    switch (l) {
        case Letter::A: v0 = &pa, v1 = &mc, v2 = &mb; break;
        case Letter::B: v0 = &mc, v1 = &pb, v2 = &ma; break;
        case Letter::C: v0 = &mb, v1 = &ma, v2 = &pc; break;
        case Letter::M: v0 = &ma, v1 = &mb, v2 = &mc; break;
    }
    const auto da = kernels::distances(*v1, *v2);
    const auto db = kernels::distances(*v2, *v0);
    const auto dc = kernels::distances(*v0, *v1);
    std::vector<EdgeLengths> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = {da[i], db[i], dc[i]};
    }
    return out;
}

namespace {

OrbitStep make_step(std::size_t n, std::optional<Letter> letter, ShapeRecord shape) {
    OrbitStep st;
    st.n = n;
    st.letter = letter;
    st.rho = std::log(std::sin(shape.angles.A));
    if (shape.edges) {
        for (std::size_t i = 0; i < 3; ++i) {
            st.sinh_half[i] = std::sinh((*shape.edges)[i] / 2);
        }
    }
    st.shape = std::move(shape);
    return st;
}

}  // namespace

OrbitTrace orbit(const Word& word, const ShapeRecord& s0) {
    OrbitTrace trace;
    trace.steps.reserve(word.size() + 1);
    trace.steps.push_back(make_step(0, std::nullopt, s0));
    for (std::size_t i = 0; i < word.size(); ++i) {
        trace.steps.push_back(make_step(i + 1, word[i], apply(word[i], trace.steps.back().shape)));
    }
    return trace;
}

std::string to_csv(const OrbitTrace& trace) {
    std::string out = "n,letter,A,B,C,a,b,c,S,ln_sin_A,sinh_a2,sinh_b2,sinh_c2\n";
    for (const auto& st : trace.steps) {
        out += std::to_string(st.n) + ",";
        if (st.letter) out += to_char(*st.letter);
        const auto& ang = st.shape.angles;
        out += "," + format_real(ang.A) + "," + format_real(ang.B) + "," + format_real(ang.C);
        for (std::size_t i = 0; i < 3; ++i) {
            out += ",";
            if (st.shape.edges) out += format_real((*st.shape.edges)[i]);
        }
        out += "," + format_real(st.shape.area) + "," + format_real(st.rho);
        for (std::size_t i = 0; i < 3; ++i) {
            out += "," + format_real(st.sinh_half[i]);
        }
        out += "\n";
    }
    return out;
}

LimitResult limit_shape(const symbolic::SymbolSequence& seq, const ShapeRecord& s0, const LimitOptions& opts) {
    if (!(opts.tol > 0)) {
        throw DomainError("limit tolerance must be positive");
    }
    if (s0.is_euclidean()) {
        return LimitResult{project_euclidean(s0.angles), 0, 0.0};
    }
    ShapeRecord cur = s0;
    for (std::size_t it = 1; it <= opts.max_iterations; ++it) {
        ShapeRecord next = apply(seq.at(it - 1), cur);
        double step = 0.0;
        for (std::size_t i = 0; i < 3; ++i) {
            step = std::max(step, std::abs(next.angles[i] - cur.angles[i]));
        }
        cur = std::move(next);
        if (cur.area < opts.tol && step < opts.tol) {
            return LimitResult{project_euclidean(cur.angles), it, std::max(cur.area, step)};
        }
    }
    throw ConvergenceFailure("limit_shape: no convergence within " + std::to_string(opts.max_iterations) +
                             " iterations for " + seq.to_string());
}

}  // namespace trisub::subdivision
