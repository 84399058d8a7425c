#pragma once

// Line and plane arrangements over Q: validation, rank-2 flats, cone/decone,
// generic sections, wiring diagrams and sub-arrangement search.

#include "charvar/numeric.hpp"

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>

namespace charvar {

using IndexSet = std::vector<int>;  // sorted, 0-based

struct Arrangement {
    int ambient_dim = 3;
    bool central = true;
    std::vector<RationalVector> forms;  // length ambient_dim + 1, constant term last
    std::vector<std::string> labels;

    std::size_t size() const { return forms.size(); }
};

struct IntersectionData {
    std::size_t n = 0;
    std::vector<IndexSet> flats;  // lexicographic by sorted vertex set

    std::vector<IndexSet> multiple_points(std::size_t min_size = 3) const {
        std::vector<IndexSet> out;
        for (const auto& f : flats)
            if (f.size() >= min_size) out.push_back(f);
        return out;
    }
    /// Census {size -> count} over flats of size >= 3.
    std::map<std::size_t, std::size_t> census() const {
        std::map<std::size_t, std::size_t> c;
        for (const auto& f : flats)
            if (f.size() >= 3) ++c[f.size()];
        return c;
    }
};

namespace detail {

inline RationalVector normalized_direction(RationalVector v) {
    // scale so the first nonzero entry is 1
    for (const auto& x : v)
        if (x != 0) {
            Rational s = x;
            for (auto& y : v) y /= s;
            break;
        }
    return v;
}

inline RationalVector cross(const RationalVector& a, const RationalVector& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline bool is_zero_vector(const RationalVector& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

inline bool proportional(const RationalVector& a, const RationalVector& b) {
    return normalized_direction(a) == normalized_direction(b);
}

}  // namespace detail

/// Throws InputError unless the arrangement satisfies every invariant.
inline void validate(const Arrangement& arr) {
    if (arr.ambient_dim != 2 && arr.ambient_dim != 3) throw InputError("ambient dimension must be 2 or 3");
    if (arr.labels.size() != arr.forms.size()) throw InputError("labels and forms differ in length");
    std::set<std::string> seen;
    for (const auto& l : arr.labels)
        if (!seen.insert(l).second) throw InputError("duplicate label " + l);
    for (std::size_t i = 0; i < arr.forms.size(); ++i) {
        const auto& f = arr.forms[i];
        if (static_cast<int>(f.size()) != arr.ambient_dim + 1)
            throw InputError("form " + std::to_string(i + 1) + " has the wrong length");
        if (std::all_of(f.begin(), f.end() - 1, [](const Rational& x) { return x == 0; }))
            throw InputError("form " + std::to_string(i + 1) + " has no linear part");
        if (arr.central && f.back() != 0)
            throw InputError("central arrangement with nonzero constant term in form " + std::to_string(i + 1));
        for (std::size_t j = 0; j < i; ++j)
            if (detail::proportional(arr.forms[j], f))
                throw InputError("forms " + std::to_string(j + 1) + " and " + std::to_string(i + 1) +
                                 " are proportional");
    }
}

inline Arrangement make_arrangement(int ambient_dim, bool central, std::vector<RationalVector> forms,
                                    std::vector<std::string> labels = {}) {
    Arrangement a{ambient_dim, central, std::move(forms), std::move(labels)};
    if (a.labels.empty())
        for (std::size_t i = 0; i < a.forms.size(); ++i) a.labels.push_back("H" + std::to_string(i + 1));
    validate(a);
    return a;
}

inline Rational json_rational(const nlohmann::json& v) {
    if (v.is_number_integer()) return Rational(v.get<long long>());
    if (v.is_string()) return parse_rational(v.get<std::string>());
    throw InputError("coefficients must be integers or \"p/q\" strings, got " + v.dump());
}

inline Arrangement arrangement_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("forms")) throw InputError("arrangement needs a \"forms\" list");
    Arrangement a;
    a.ambient_dim = j.value("ambient_dim", 3);
    const auto& forms = j.at("forms");
    if (!forms.is_array()) throw InputError("\"forms\" must be a list");
    for (const auto& f : forms) {
        if (!f.is_array()) throw InputError("each form must be a list of coefficients");
        RationalVector v;
        for (const auto& c : f) v.push_back(json_rational(c));
        a.forms.push_back(std::move(v));
    }
    bool all_homogeneous = std::all_of(a.forms.begin(), a.forms.end(),
                                       [](const RationalVector& f) { return !f.empty() && f.back() == 0; });
    a.central = j.contains("central") ? j.at("central").get<bool>() : all_homogeneous;
    if (j.contains("labels"))
        for (const auto& l : j.at("labels")) a.labels.push_back(l.get<std::string>());
    else
        for (std::size_t i = 0; i < a.forms.size(); ++i) a.labels.push_back("H" + std::to_string(i + 1));
    validate(a);
    return a;
}

inline Arrangement parse_arrangement(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("malformed arrangement JSON: ") + e.what());
    }
    return arrangement_from_json(j);
}

inline nlohmann::json arrangement_to_json(const Arrangement& a) {
    nlohmann::json forms = nlohmann::json::array();
    for (const auto& f : a.forms) {
        nlohmann::json row = nlohmann::json::array();
        for (const auto& c : f) {
            if (denom(c) == 1 && abs(numer(c)) < Integer(1LL << 62))
                row.push_back(numer(c).convert_to<long long>());
            else
                row.push_back(to_string(c));
        }
        forms.push_back(row);
    }
    return {{"ambient_dim", a.ambient_dim}, {"central", a.central}, {"forms", forms}, {"labels", a.labels}};
}

/// Rank-2 flats. Central 3-d: lines through 0; affine 2-d: points;
/// central 2-d: the origin.
inline IntersectionData intersection_data(const Arrangement& arr) {
    validate(arr);
    const std::size_t n = arr.size();
    std::map<RationalVector, std::set<int>> groups;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto& a = arr.forms[i];
            const auto& b = arr.forms[j];
            RationalVector key;
            if (arr.ambient_dim == 3) {
                if (!arr.central) throw InputError("affine arrangements in dimension 3 are not supported");
                key = detail::normalized_direction(detail::cross({a[0], a[1], a[2]}, {b[0], b[1], b[2]}));
            } else {
                Rational det = a[0] * b[1] - a[1] * b[0];
                if (det == 0) continue;  // parallel
                key = {(a[1] * b[2] - a[2] * b[1]) / det, (a[2] * b[0] - a[0] * b[2]) / det};
            }
            groups[key].insert(static_cast<int>(i));
            groups[key].insert(static_cast<int>(j));
        }
    IntersectionData d;
    d.n = n;
    for (auto& [k, s] : groups) d.flats.emplace_back(s.begin(), s.end());
    std::sort(d.flats.begin(), d.flats.end());
    return d;
}

/// Affine 2-d -> central 3-d, adding the plane at infinity (z) last.
inline Arrangement cone(const Arrangement& arr, const std::string& new_label = "") {
    if (arr.central || arr.ambient_dim != 2) throw InputError("cone expects an affine arrangement in dimension 2");
    Arrangement c;
    c.ambient_dim = 3;
    c.central = true;
    for (const auto& f : arr.forms) c.forms.push_back({f[0], f[1], f[2], Rational(0)});
    c.forms.push_back({0, 0, 1, 0});
    c.labels = arr.labels;
    std::string label = new_label.empty() ? "H" + std::to_string(arr.size() + 1) : new_label;
    if (std::find(c.labels.begin(), c.labels.end(), label) != c.labels.end()) label += "'";
    c.labels.push_back(label);
    validate(c);
    return c;
}

struct Decone {
    Arrangement affine;
    int removed = -1;              // index of the hyperplane sent to infinity
    std::vector<int> original;     // affine index -> central index
};

/// Central 3-d -> affine 2-d: coordinates are changed so hyperplane h is
/// the kernel of the last coordinate, which is then set to 1.
inline Decone decone(const Arrangement& arr, int h = -1) {
    if (!arr.central || arr.ambient_dim != 3) throw InputError("decone expects a central arrangement in dimension 3");
    if (h < 0) h = static_cast<int>(arr.size()) - 1;
    if (h >= static_cast<int>(arr.size())) throw InputError("decone hyperplane out of range");
    const auto& H = arr.forms[static_cast<std::size_t>(h)];
    RationalVector hv{H[0], H[1], H[2]};
    // new coordinates (u, v, w) = T (x, y, z), rows of T: two unit vectors then h
    RationalMatrix T;
    for (int a = 0; a < 3 && T.empty(); ++a)
        for (int b = a + 1; b < 3 && T.empty(); ++b) {
            RationalVector ea(3, 0), eb(3, 0);
            ea[static_cast<std::size_t>(a)] = 1;
            eb[static_cast<std::size_t>(b)] = 1;
            if (!detail::is_zero_vector(detail::cross(ea, eb)) &&
                (detail::cross(ea, eb)[0] * hv[0] + detail::cross(ea, eb)[1] * hv[1] + detail::cross(ea, eb)[2] * hv[2]) != 0)
                T = {ea, eb, hv};
        }
    // forms in new coordinates: f . T^{-1}
    Rational det = T[0][0] * (T[1][1] * T[2][2] - T[1][2] * T[2][1]) - T[0][1] * (T[1][0] * T[2][2] - T[1][2] * T[2][0]) +
                   T[0][2] * (T[1][0] * T[2][1] - T[1][1] * T[2][0]);
    RationalMatrix inv(3, RationalVector(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
            inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                (T[static_cast<std::size_t>(r0)][static_cast<std::size_t>(c0)] * T[static_cast<std::size_t>(r1)][static_cast<std::size_t>(c1)] -
                 T[static_cast<std::size_t>(r0)][static_cast<std::size_t>(c1)] * T[static_cast<std::size_t>(r1)][static_cast<std::size_t>(c0)]) /
                det;
        }
    Decone d;
    d.removed = h;
    d.affine.ambient_dim = 2;
    d.affine.central = false;
    for (std::size_t k = 0; k < arr.size(); ++k) {
        if (static_cast<int>(k) == h) continue;
        RationalVector g(3, 0);
        for (int j = 0; j < 3; ++j)
            for (int i = 0; i < 3; ++i)
                g[static_cast<std::size_t>(j)] += arr.forms[k][static_cast<std::size_t>(i)] * inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        d.affine.forms.push_back(g);  // g0 u + g1 v + g2 (w = 1)
        d.affine.labels.push_back(arr.labels[k]);
        d.original.push_back(static_cast<int>(k));
    }
    validate(d.affine);
    return d;
}

/// Section of a central 3-d arrangement by the plane z = alpha x + beta y + gamma.
inline Arrangement generic_section(const Arrangement& arr, const RationalVector& plane) {
    if (!arr.central || arr.ambient_dim != 3) throw InputError("generic_section expects a central 3-d arrangement");
    if (plane.size() != 3) throw InputError("plane is given by three coefficients (z = a x + b y + c)");
    if (plane[2] == 0) throw InputError("section plane passes through the origin: not generic");
    Arrangement s;
    s.ambient_dim = 2;
    s.central = false;
    s.labels = arr.labels;
    for (std::size_t k = 0; k < arr.size(); ++k) {
        const auto& f = arr.forms[k];
        RationalVector g{f[0] + f[2] * plane[0], f[1] + f[2] * plane[1], f[2] * plane[2]};
        if (g[0] == 0 && g[1] == 0) throw InputError("section is not generic: hyperplane " + arr.labels[k] + " is lost");
        s.forms.push_back(g);
    }
    try {
        validate(s);
    } catch (const InputError&) {
        throw InputError("section is not generic: two lines coincide");
    }
    if (intersection_data(s).flats != intersection_data(arr).flats)
        throw InputError("section is not generic: intersection data changes");
    return s;
}

// ---------------------------------------------------------------- wiring diagrams

struct WiringVertex {
    IndexSet wires;    // I_k, wire numbers (0-based) meeting here
    IndexSet lower;    // I'_k
    IndexSet upper;    // I''_k
    IndexSet J;        // {i in I''_k : min I_k < i < max I_k}
    Rational p, q;     // projection and transverse coordinate
    std::vector<int> order_before, order_after;  // wire at each position, bottom to top
};

struct WiringDiagram {
    std::size_t n = 0;
    std::vector<int> line_of_wire;  // arrangement index of each wire
    std::vector<WiringVertex> vertices;
    RationalVector direction;
    // fibered mode
    std::vector<int> fiber_lines;             // arrangement index per fiber, decreasing projection
    std::vector<int> fiber_of_vertex;         // per vertex
};

namespace detail {

struct WireLine {
    Rational slope, intercept;  // q = slope * p + intercept
};

inline std::optional<WireLine> wire_of(const RationalVector& f, const RationalVector& dir) {
    const Rational& al = f[0];
    const Rational& be = f[1];
    const Rational& ga = f[2];
    const Rational& a = dir[0];
    const Rational& b = dir[1];
    Rational den = be * a - al * b;
    if (den == 0) return std::nullopt;  // parallel to fibers
    return WireLine{-(al * a + be * b) / den, -ga * (a * a + b * b) / den};
}

}  // namespace detail

/// Projection value p = a x + b y of every line parallel to the fibers.
inline std::optional<Rational> fiber_value(const RationalVector& f, const RationalVector& dir) {
    if (detail::wire_of(f, dir)) return std::nullopt;
    // f = c (a, b, .) up to scale: a x + b y = -gamma / c
    Rational c = dir[0] != 0 ? f[0] / dir[0] : f[1] / dir[1];
    return -f[2] / c;
}

namespace detail {

inline WiringDiagram build_wiring(const Arrangement& arr, const RationalVector& dir, bool fibered) {
    if (arr.central || arr.ambient_dim != 2) throw InputError("wiring diagrams need an affine arrangement in dimension 2");
    if (dir.size() != 2 || (dir[0] == 0 && dir[1] == 0)) throw InputError("projection direction must be a nonzero pair");
    WiringDiagram wd;
    wd.direction = dir;
    std::vector<WireLine> lines;
    std::vector<std::pair<Rational, int>> fibers;
    for (std::size_t k = 0; k < arr.size(); ++k) {
        auto w = wire_of(arr.forms[k], dir);
        if (!w) {
            if (!fibered)
                throw InputError("line " + arr.labels[k] + " is parallel to the projection fibers; perturb the direction");
            fibers.emplace_back(*fiber_value(arr.forms[k], dir), static_cast<int>(k));
            continue;
        }
        wd.line_of_wire.push_back(static_cast<int>(k));
        lines.push_back(*w);
    }
    // wires numbered bottom to top near the basepoint p -> +infinity
    std::vector<std::size_t> idx(lines.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
        if (lines[x].slope != lines[y].slope) return lines[x].slope < lines[y].slope;
        return lines[x].intercept < lines[y].intercept;
    });
    std::vector<int> lw;
    std::vector<WireLine> sorted;
    for (auto i : idx) {
        lw.push_back(wd.line_of_wire[i]);
        sorted.push_back(lines[i]);
    }
    wd.line_of_wire = lw;
    lines = sorted;
    wd.n = lines.size();

    std::sort(fibers.begin(), fibers.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
    for (const auto& f : fibers) wd.fiber_lines.push_back(f.second);

    // vertices: points where >= 2 wires meet
    std::map<std::pair<Rational, Rational>, std::set<int>> pts;
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            if (lines[i].slope == lines[j].slope) continue;
            Rational p = (lines[j].intercept - lines[i].intercept) / (lines[i].slope - lines[j].slope);
            Rational q = lines[i].slope * p + lines[i].intercept;
            auto& s = pts[{p, q}];
            s.insert(static_cast<int>(i));
            s.insert(static_cast<int>(j));
        }
    std::vector<std::pair<std::pair<Rational, Rational>, std::set<int>>> vs(pts.begin(), pts.end());
    // decreasing p; lower vertex first on a common fiber
    std::sort(vs.begin(), vs.end(), [](const auto& x, const auto& y) {
        if (x.first.first != y.first.first) return x.first.first > y.first.first;
        return x.first.second < y.first.second;
    });
    for (std::size_t k = 1; k < vs.size(); ++k)
        if (vs[k].first.first == vs[k - 1].first.first && !fibered)
            throw InputError("two vertices share a projection value; perturb the direction");

    std::vector<int> order(wd.n);
    for (std::size_t i = 0; i < wd.n; ++i) order[i] = static_cast<int>(i);
    for (auto& [pq, s] : vs) {
        WiringVertex v;
        v.p = pq.first;
        v.q = pq.second;
        v.wires.assign(s.begin(), s.end());
        v.order_before = order;
        std::vector<std::size_t> pos;
        for (std::size_t r = 0; r < order.size(); ++r)
            if (s.count(order[r])) pos.push_back(r);
        for (std::size_t r = 1; r < pos.size(); ++r)
            if (pos[r] != pos[r - 1] + 1) throw std::logic_error("wiring trace: middle wires are not adjacent");
        for (std::size_t r = 0; r < pos.front(); ++r) v.lower.push_back(order[r]);
        for (std::size_t r = pos.back() + 1; r < order.size(); ++r) v.upper.push_back(order[r]);
        std::sort(v.lower.begin(), v.lower.end());
        std::sort(v.upper.begin(), v.upper.end());
        int lo = v.wires.front(), hi = v.wires.back();
        for (int i : v.upper)
            if (lo < i && i < hi) v.J.push_back(i);
        std::reverse(order.begin() + static_cast<long>(pos.front()), order.begin() + static_cast<long>(pos.back()) + 1);
        v.order_after = order;
        if (fibered) {
            int fiber = -1;
            for (std::size_t f = 0; f < fibers.size(); ++f)
                if (fibers[f].first == v.p) fiber = static_cast<int>(f);
            if (fiber < 0) {
                IndexSet labels;
                throw InputError("arrangement is not linearly fibered: a vertex of the wires lies on no fiber line");
            }
            wd.fiber_of_vertex.push_back(fiber);
        }
        wd.vertices.push_back(std::move(v));
    }
    // after all vertices the order is the reversal of (slope-sorted) wires,
    // except that parallel wires keep their relative order
    return wd;
}

}  // namespace detail

/// Wiring diagram of a real affine line arrangement for the projection
/// p = a x + b y. Ties and lines parallel to the fibers are errors.
inline WiringDiagram wiring_diagram(const Arrangement& arr, const RationalVector& direction) {
    return detail::build_wiring(arr, direction, false);
}

/// Wiring diagram of the non-fiber lines of a linearly fibered arrangement;
/// lines parallel to the fibers become fibers.
inline WiringDiagram fibered_wiring_diagram(const Arrangement& arr, const RationalVector& direction) {
    return detail::build_wiring(arr, direction, true);
}

/// Projection values of vertices not covered by a fiber line.
inline RationalVector missing_fibers(const Arrangement& arr, const RationalVector& direction) {
    std::set<Rational> have, need;
    Arrangement wires = arr;
    wires.forms.clear();
    wires.labels.clear();
    for (std::size_t k = 0; k < arr.size(); ++k) {
        auto fv = fiber_value(arr.forms[k], direction);
        if (fv) have.insert(*fv);
        else {
            wires.forms.push_back(arr.forms[k]);
            wires.labels.push_back(arr.labels[k]);
        }
    }
    for (const auto& f : intersection_data(wires).flats) {
        const auto& a = wires.forms[static_cast<std::size_t>(f[0])];
        const auto& b = wires.forms[static_cast<std::size_t>(f[1])];
        Rational det = a[0] * b[1] - a[1] * b[0];
        Rational x = (a[1] * b[2] - a[2] * b[1]) / det, y = (a[2] * b[0] - a[0] * b[2]) / det;
        need.insert(direction[0] * x + direction[1] * y);
    }
    RationalVector out;
    for (const auto& v : need)
        if (!have.count(v)) out.push_back(v);
    return out;
}

inline bool is_generic_direction(const Arrangement& arr, const RationalVector& dir) {
    try {
        wiring_diagram(arr, dir);
        return true;
    } catch (const InputError&) {
        return false;
    }
}

/// Deterministic search for a generic projection direction near `hint`.
inline RationalVector suggest_direction(const Arrangement& arr, const RationalVector& hint = {1, 0}) {
    if (is_generic_direction(arr, hint)) return hint;
    for (int denom_k = 1; denom_k <= 64; ++denom_k)
        for (int num = 1; num <= 2 * denom_k; ++num)
            for (int sign : {1, -1}) {
                RationalVector d{hint[0] + Rational(sign * num, 7 * denom_k), hint[1] + Rational(num, 11 * denom_k)};
                if (is_generic_direction(arr, d)) return d;
            }
    throw InputError("no generic projection direction found");
}

// ---------------------------------------------------------------- pattern search

/// Flat-hypergraph view used for isomorphism search: pair -> flat id.
struct FlatTable {
    std::size_t n = 0;
    std::vector<std::vector<int>> flat_of_pair;
    std::vector<std::size_t> flat_size;

    explicit FlatTable(const IntersectionData& d) : n(d.n), flat_of_pair(d.n, std::vector<int>(d.n, -1)) {
        for (std::size_t f = 0; f < d.flats.size(); ++f) {
            flat_size.push_back(d.flats[f].size());
            for (int a : d.flats[f])
                for (int b : d.flats[f])
                    if (a != b) flat_of_pair[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = static_cast<int>(f);
        }
    }
    bool collinear(int a, int b, int c) const {
        int f = flat_of_pair[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
        return f >= 0 && f == flat_of_pair[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)];
    }
};

/// All injective maps (pattern index -> arrangement index) under which the
/// size >= 3 flats of the restricted arrangement match the pattern exactly.
inline std::vector<std::vector<int>> find_embeddings(const IntersectionData& arr, const IntersectionData& pattern) {
    std::vector<std::vector<int>> out;
    if (pattern.n > arr.n) return out;
    FlatTable A(arr), P(pattern);
    // order pattern vertices: most multiple-point incidences first
    std::vector<int> order(pattern.n);
    std::vector<int> weight(pattern.n, 0);
    for (const auto& f : pattern.flats)
        if (f.size() >= 3)
            for (int v : f) weight[static_cast<std::size_t>(v)] += static_cast<int>(f.size());
    for (std::size_t i = 0; i < pattern.n; ++i) order[i] = static_cast<int>(i);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return weight[static_cast<std::size_t>(a)] > weight[static_cast<std::size_t>(b)]; });
    std::vector<int> map(pattern.n, -1);
    std::vector<bool> used(arr.n, false);
    std::function<void(std::size_t)> rec = [&](std::size_t depth) {
        if (depth == pattern.n) {
            out.push_back(map);
            return;
        }
        int pv = order[depth];
        for (std::size_t c = 0; c < arr.n; ++c) {
            if (used[c]) continue;
            bool ok = true;
            for (std::size_t x = 0; x < depth && ok; ++x)
                for (std::size_t y = x + 1; y < depth && ok; ++y) {
                    int px = order[x], py = order[y];
                    bool pc = P.collinear(pv, px, py);
                    bool ac = A.collinear(static_cast<int>(c), map[static_cast<std::size_t>(px)], map[static_cast<std::size_t>(py)]);
                    if (pc != ac) ok = false;
                }
            if (!ok) continue;
            map[static_cast<std::size_t>(pv)] = static_cast<int>(c);
            used[c] = true;
            rec(depth + 1);
            used[c] = false;
            map[static_cast<std::size_t>(pv)] = -1;
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

/// Supports of sub-arrangements whose flat hypergraph is isomorphic to pattern.
inline std::vector<IndexSet> find_subarrangements(const IntersectionData& arr, const IntersectionData& pattern) {
    std::set<IndexSet> supports;
    for (const auto& m : find_embeddings(arr, pattern)) {
        IndexSet s(m.begin(), m.end());
        std::sort(s.begin(), s.end());
        supports.insert(s);
    }
    return {supports.begin(), supports.end()};
}

inline std::string format_set(const IndexSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i] + 1);
    return out + "}";
}

}  // namespace charvar
