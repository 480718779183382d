#include "trisub/render.hpp"

#include <string>
#include <vector>

#include "trisub/error.hpp"
#include "trisub/format.hpp"
#include "trisub/hyptrig.hpp"
#include "trisub/kernels.hpp"

namespace trisub::render {

namespace {

using plane_model::HPoint;
using kernels::PointSet;

// Triangles stored as three parallel point sets (vertex slots A, B, C).
struct Cells {
    PointSet a, b, c;
    std::vector<std::string> words;
    std::vector<int> color;  // palette index, -1 for the root

    [[nodiscard]] std::size_t size() const { return a.size(); }
};

Cells root_cell(const EdgeLengths& e) {
    const auto t = plane_model::place(e);
    Cells root;
    root.a.resize(1);
    root.b.resize(1);
    root.c.resize(1);
    root.a.set(0, t.p_a);
    root.b.set(0, t.p_b);
    root.c.set(0, t.p_c);
    root.words.emplace_back();
    root.color.push_back(-1);
    return root;
}

// Children of every cell, parent-major and letter-minor, so one level of
// depth-first leaves comes out in order.
Cells subdivide(const Cells& in, std::span<const Letter> letters) {
    PointSet ma, mb, mc;
    kernels::midpoints(in.b, in.c, ma);
    kernels::midpoints(in.c, in.a, mb);
    kernels::midpoints(in.a, in.b, mc);

    Cells out;
    const std::size_t n = in.size() * letters.size();
    out.a.resize(n);
    out.b.resize(n);
    out.c.resize(n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < in.size(); ++i) {
        for (Letter l : letters) {
            HPoint v0, v1, v2;
            switch (l) {
                case Letter::A: v0 = in.a.get(i), v1 = mc.get(i), v2 = mb.get(i); break;
                case Letter::B: v0 = mc.get(i), v1 = in.b.get(i), v2 = ma.get(i); break;
                case Letter::C: v0 = mb.get(i), v1 = ma.get(i), v2 = in.c.get(i); break;
                case Letter::M: v0 = ma.get(i), v1 = mb.get(i), v2 = mc.get(i); break;
            }
            out.a.set(k, v0);
            out.b.set(k, v1);
            out.c.set(k, v2);
            out.words.push_back(in.words[i] + to_char(l));
            out.color.push_back(static_cast<int>(l));
            ++k;
        }
    }
    return out;
}

// Outline points of every cell, ready for one batched disk projection.
PointSet outlines(const Cells& cells, const RenderSpec& spec) {
    const bool arcs = spec.model == plane_model::DiskModel::poincare;
    const std::size_t per_edge = arcs ? spec.sampling - 1 : 1;
    PointSet pts(cells.size() * 3 * per_edge);
    std::size_t k = 0;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const HPoint v[3] = {cells.a.get(i), cells.b.get(i), cells.c.get(i)};
        for (std::size_t j = 0; j < 3; ++j) {
            const HPoint& from = v[j];
            const HPoint& to = v[(j + 1) % 3];
            for (std::size_t s = 0; s < per_edge; ++s) {
                const double t = static_cast<double>(s) / static_cast<double>(per_edge);
                pts.set(k++, s == 0 ? from : plane_model::geodesic_point(from, to, t));
            }
        }
    }
    return pts;
}

void emit_cells(std::string& svg, const Cells& cells, const RenderSpec& spec, bool fill_last) {
    const auto disk = kernels::to_disk(outlines(cells, spec), spec.model);
    const std::size_t per_cell = disk.size() / cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const int c = cells.color[i];
        const std::string& color = c < 0 ? spec.root_color : spec.palette[static_cast<std::size_t>(c)];
        svg += "<polygon data-word=\"" + cells.words[i] + "\" points=\"";
        for (std::size_t p = 0; p < per_cell; ++p) {
            const auto& d = disk[i * per_cell + p];
            if (p > 0) svg += ' ';
            svg += format_real(d.x) + ',' + format_real(d.y);
        }
        const bool filled = fill_last && i + 1 == cells.size();
        svg += "\" fill=\"" + (filled ? color : std::string("none")) + "\"";
        if (filled) svg += " fill-opacity=\"0.35\"";
        svg += " stroke=\"" + color + "\" stroke-width=\"1\" vector-effect=\"non-scaling-stroke\"/>\n";
    }
}

void append(Cells& dst, const Cells& src) {
    for (std::size_t i = 0; i < src.size(); ++i) {
        const std::size_t k = dst.size();
        dst.a.resize(k + 1);
        dst.b.resize(k + 1);
        dst.c.resize(k + 1);
        dst.a.set(k, src.a.get(i));
        dst.b.set(k, src.b.get(i));
        dst.c.set(k, src.c.get(i));
        dst.words.push_back(src.words[i]);
        dst.color.push_back(src.color[i]);
    }
}

}  // namespace

void RenderSpec::validate() const {
    if (!word && depth > kMaxDepth) {
        throw DomainError("render depth " + std::to_string(depth) + " exceeds the limit of " +
                          std::to_string(kMaxDepth) + " (4^depth cells)");
    }
    if (sampling < 2) {
        throw DomainError("render sampling must be at least 2");
    }
    if (canvas < 1) {
        throw DomainError("render canvas must be positive");
    }
}

std::string render_svg(const RenderSpec& spec, const EdgeLengths& e) {
    spec.validate();
    hyptrig::validate_edges(e);
    const std::string size = std::to_string(spec.canvas);
    std::string svg = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + size + "\" height=\"" + size +
           "\" viewBox=\"-1 -1 2 2\">\n";
    svg += "<circle cx=\"0\" cy=\"0\" r=\"1\" fill=\"none\" stroke=\"#999999\" stroke-width=\"1\" "
           "vector-effect=\"non-scaling-stroke\"/>\n";

    const Cells root = root_cell(e);
    if (spec.word) {
        Cells chain = root;
        Cells cur = root;
        for (Letter l : *spec.word) {
            const Letter one[1] = {l};
            cur = subdivide(cur, one);
            append(chain, cur);
        }
        emit_cells(svg, chain, spec, !spec.word->empty());
    } else {
        emit_cells(svg, root, spec, false);
        if (spec.depth > 0) {
            Cells level = root;
            for (std::size_t d = 0; d < spec.depth; ++d) {
                level = subdivide(level, kAllLetters);
            }
            emit_cells(svg, level, spec, false);
        }
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace trisub::render
