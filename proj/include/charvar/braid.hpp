#pragma once

// Free groups, pure braids acting by the Artin representation, braid
// monodromy of real line arrangements and the resulting presentations.

#include "charvar/arrangement.hpp"

#include <sstream>

namespace charvar {

/// Free-group word; letter +(g+1) is x_g, -(g+1) its inverse. Always reduced.
class Word {
public:
    Word() = default;
    Word(std::initializer_list<int> letters) {
        for (int l : letters) push(l);
    }
    explicit Word(const std::vector<int>& letters) {
        for (int l : letters) push(l);
    }
    static Word generator(int g, int e = 1) {
        Word w;
        for (int k = 0; k < std::abs(e); ++k) w.push(e > 0 ? g + 1 : -(g + 1));
        return w;
    }

    const std::vector<int>& letters() const { return l_; }
    std::size_t length() const { return l_.size(); }
    bool empty() const { return l_.empty(); }

    void push(int letter) {
        if (letter == 0) throw std::invalid_argument("zero is not a letter");
        if (!l_.empty() && l_.back() == -letter) l_.pop_back();
        else l_.push_back(letter);
    }

    Word inverse() const {
        Word w;
        w.l_.reserve(l_.size());
        for (auto it = l_.rbegin(); it != l_.rend(); ++it) w.l_.push_back(-*it);
        return w;
    }

    Word& operator*=(const Word& o) {
        for (int l : o.l_) push(l);
        return *this;
    }
    friend Word operator*(Word a, const Word& b) { return a *= b; }
    friend bool operator==(const Word& a, const Word& b) { return a.l_ == b.l_; }
    friend bool operator!=(const Word& a, const Word& b) { return a.l_ != b.l_; }
    friend bool operator<(const Word& a, const Word& b) { return a.l_ < b.l_; }

    /// c^{-1} w c
    Word conjugated_by(const Word& c) const { return c.inverse() * *this * c; }

    int max_generator() const {
        int m = -1;
        for (int l : l_) m = std::max(m, std::abs(l) - 1);
        return m;
    }

    std::vector<long> exponent_sums(std::size_t n) const {
        std::vector<long> s(n, 0);
        for (int l : l_) {
            auto g = static_cast<std::size_t>(std::abs(l) - 1);
            if (g >= n) throw std::out_of_range("generator index out of range");
            s[g] += l > 0 ? 1 : -1;
        }
        return s;
    }

    /// Replace x_g by images[g].
    Word substitute(const std::vector<Word>& images) const {
        Word w;
        for (int l : l_) {
            auto g = static_cast<std::size_t>(std::abs(l) - 1);
            if (g >= images.size()) throw std::out_of_range("generator index out of range");
            w *= l > 0 ? images[g] : images[g].inverse();
        }
        return w;
    }

    std::string str(const std::vector<std::string>& names = {}) const {
        if (l_.empty()) return "1";
        std::ostringstream os;
        for (std::size_t k = 0; k < l_.size();) {
            std::size_t e = k;
            while (e < l_.size() && l_[e] == l_[k]) ++e;
            auto g = static_cast<std::size_t>(std::abs(l_[k]) - 1);
            if (k) os << " ";
            os << (g < names.size() ? names[g] : "x" + std::to_string(g + 1));
            long power = static_cast<long>(e - k) * (l_[k] > 0 ? 1 : -1);
            if (power != 1) os << "^" << power;
            k = e;
        }
        return os.str();
    }

private:
    std::vector<int> l_;
};

struct BraidLetter {
    int i, j;  // 0-based, i < j
    int e;     // +1 or -1
    friend bool operator==(const BraidLetter& a, const BraidLetter& b) { return a.i == b.i && a.j == b.j && a.e == b.e; }
};

/// Word in the pure braid generators A_{i,j}; product read left to right.
struct PureBraid {
    int n = 0;
    std::vector<BraidLetter> letters;

    PureBraid() = default;
    explicit PureBraid(int strands) : n(strands) {}

    static PureBraid generator(int n, int i, int j, int e = 1) {
        if (i > j) std::swap(i, j);
        if (i < 0 || j >= n || i == j) throw std::out_of_range("pure braid generator index out of range");
        PureBraid b(n);
        b.letters.push_back({i, j, e});
        return b;
    }
    PureBraid inverse() const {
        PureBraid b(n);
        for (auto it = letters.rbegin(); it != letters.rend(); ++it) b.letters.push_back({it->i, it->j, -it->e});
        return b;
    }
    PureBraid& operator*=(const PureBraid& o) {
        if (o.n != n) throw std::invalid_argument("pure braids on different strand counts");
        letters.insert(letters.end(), o.letters.begin(), o.letters.end());
        return *this;
    }
    friend PureBraid operator*(PureBraid a, const PureBraid& b) { return a *= b; }
    /// d^{-1} b d
    PureBraid conjugated_by(const PureBraid& d) const { return d.inverse() * *this * d; }
    bool is_identity_word() const { return letters.empty(); }

    std::string str() const {
        if (letters.empty()) return "1";
        std::ostringstream os;
        for (std::size_t k = 0; k < letters.size(); ++k) {
            if (k) os << " ";
            os << "A" << letters[k].i + 1 << "," << letters[k].j + 1;
            if (letters[k].e != 1) os << "^" << letters[k].e;
        }
        return os.str();
    }
};

/// Images of x_0..x_{n-1} under the generator A_{i,j}^{e}.
inline std::vector<Word> artin_generator_images(int n, const BraidLetter& a) {
    std::vector<Word> img;
    for (int g = 0; g < n; ++g) img.push_back(Word::generator(g));
    const Word xi = Word::generator(a.i), xj = Word::generator(a.j);
    if (a.e == 1) {
        const Word c = xi * xj * xi.inverse() * xj.inverse();
        img[static_cast<std::size_t>(a.i)] = xi * xj * xi * xj.inverse() * xi.inverse();
        img[static_cast<std::size_t>(a.j)] = xi * xj * xi.inverse();
        for (int r = a.i + 1; r < a.j; ++r) img[static_cast<std::size_t>(r)] = c * Word::generator(r) * c.inverse();
    } else if (a.e == -1) {
        const Word p = xi * xj;
        img[static_cast<std::size_t>(a.i)] = xi.conjugated_by(p);
        img[static_cast<std::size_t>(a.j)] = xj.conjugated_by(p);
        const Word c = xj.inverse() * xi.inverse() * xj * xi;
        for (int r = a.i + 1; r < a.j; ++r) img[static_cast<std::size_t>(r)] = c * Word::generator(r) * c.inverse();
    } else {
        throw std::invalid_argument("braid letters carry exponent +1 or -1");
    }
    return img;
}

/// Images of all generators under b, letters applied left to right:
/// act(b1 b2, w) = act(b2, act(b1, w)).
inline std::vector<Word> artin_images(const PureBraid& b) {
    std::vector<Word> img;
    for (int g = 0; g < b.n; ++g) img.push_back(Word::generator(g));
    for (const auto& letter : b.letters) {
        auto gen = artin_generator_images(b.n, letter);
        for (auto& w : img) w = w.substitute(gen);
    }
    return img;
}

inline Word artin_act(const PureBraid& b, const Word& w) {
    if (w.max_generator() >= b.n) throw std::out_of_range("word uses a generator beyond the strand count");
    return w.substitute(artin_images(b));
}

/// Full twist on the strands I (sorted, 0-based).
inline PureBraid full_twist(const IndexSet& I, int n) {
    if (I.size() < 2) throw std::invalid_argument("full twist needs at least two strands");
    PureBraid b(n);
    for (std::size_t c = 1; c < I.size(); ++c)
        for (std::size_t a = 0; a < c; ++a) b *= PureBraid::generator(n, I[a], I[c]);
    return b;
}

inline PureBraid conjugated_twist(const IndexSet& I, const PureBraid& delta) {
    return full_twist(I, delta.n).conjugated_by(delta);
}

/// Parses "A1,2 A2,3^-1 A1,3,5": each token is a full twist on the listed
/// strands (1-based), optionally inverted.
inline PureBraid parse_pure_braid(const std::string& text, int n) {
    PureBraid b(n);
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        if (tok == "1") continue;
        if (tok.size() < 2 || tok[0] != 'A') throw InputError("bad braid token '" + tok + "'");
        int e = 1;
        auto caret = tok.find('^');
        std::string body = tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1);
        if (caret != std::string::npos) {
            std::string pw = tok.substr(caret + 1);
            if (pw == "-1") e = -1;
            else if (pw != "1") throw InputError("braid token exponent must be 1 or -1: '" + tok + "'");
        }
        IndexSet I;
        std::istringstream parts(body);
        std::string part;
        while (std::getline(parts, part, ',')) {
            try {
                std::size_t used = 0;
                int s = std::stoi(part, &used);
                if (used != part.size() || s < 1 || s > n) throw InputError("");
                I.push_back(s - 1);
            } catch (const std::exception&) {
                throw InputError("bad strand in braid token '" + tok + "'");
            }
        }
        std::sort(I.begin(), I.end());
        if (I.size() < 2 || std::adjacent_find(I.begin(), I.end()) != I.end())
            throw InputError("braid token needs two or more distinct strands: '" + tok + "'");
        auto twist = full_twist(I, n);
        b *= e == 1 ? twist : twist.inverse();
    }
    return b;
}

/// Equality in the pure braid group (the Artin action is faithful).
inline bool braid_equal(const PureBraid& a, const PureBraid& b) {
    return a.n == b.n && artin_images(a) == artin_images(b);
}

/// Conjugator and monodromy generator for each vertex of a real wiring diagram.
struct Monodromy {
    std::vector<PureBraid> deltas;
    std::vector<PureBraid> alphas;
};

inline Monodromy braid_monodromy(const WiringDiagram& wd) {
    const int n = static_cast<int>(wd.n);
    Monodromy m;
    for (const auto& v : wd.vertices) {
        PureBraid delta(n);
        for (int i : v.wires)
            for (int j : v.J)
                if (j < i) delta *= PureBraid::generator(n, j, i);
        m.alphas.push_back(conjugated_twist(v.wires, delta));
        m.deltas.push_back(std::move(delta));
    }
    return m;
}

// ---------------------------------------------------------------- presentations

enum class PresentationKind { BraidMonodromy, Fibered };

struct Generator {
    std::string label;    // name of the hyperplane (or fiber line)
    int hyperplane = -1;  // index in the source arrangement
    bool fiber = false;
};

struct GroupPresentation {
    PresentationKind kind = PresentationKind::BraidMonodromy;
    std::vector<Generator> generators;
    std::vector<Word> relators;
    // fibered data
    std::size_t wires = 0;
    std::vector<PureBraid> fiber_monodromy;

    std::size_t rank() const { return generators.size(); }

    std::vector<std::string> names() const {
        std::vector<std::string> out;
        std::size_t x = 0, y = 0;
        for (const auto& g : generators) out.push_back(g.fiber ? "y" + std::to_string(++y) : "x" + std::to_string(++x));
        return out;
    }

    bool relators_homologically_trivial() const {
        for (const auto& r : relators)
            for (long s : r.exponent_sums(rank()))
                if (s != 0) return false;
        return true;
    }
};

/// Relators alpha_k(x_i) x_i^{-1}, i in I_k minus its maximum; wires are
/// renamed through `generator_of_wire`.
inline GroupPresentation monodromy_presentation(const std::vector<PureBraid>& alphas, const std::vector<IndexSet>& flats,
                                                std::vector<Generator> generators,
                                                const std::vector<int>& generator_of_wire) {
    if (alphas.size() != flats.size()) throw std::invalid_argument("one monodromy generator per vertex required");
    GroupPresentation P;
    P.kind = PresentationKind::BraidMonodromy;
    P.generators = std::move(generators);
    std::vector<Word> rename;
    for (int g : generator_of_wire) rename.push_back(Word::generator(g));
    for (std::size_t k = 0; k < alphas.size(); ++k) {
        auto img = artin_images(alphas[k]);
        for (std::size_t t = 0; t + 1 < flats[k].size(); ++t) {
            auto i = static_cast<std::size_t>(flats[k][t]);
            P.relators.push_back((img[i] * Word::generator(static_cast<int>(i)).inverse()).substitute(rename));
        }
    }
    return P;
}

/// Braid monodromy presentation of an affine real line arrangement,
/// generators in hyperplane order.
inline GroupPresentation braid_monodromy_presentation(const Arrangement& arr, const RationalVector& direction) {
    auto wd = wiring_diagram(arr, direction);
    auto m = braid_monodromy(wd);
    std::vector<IndexSet> flats;
    for (const auto& v : wd.vertices) flats.push_back(v.wires);
    std::vector<Generator> gens;
    for (std::size_t k = 0; k < arr.size(); ++k) gens.push_back({arr.labels[k], static_cast<int>(k), false});
    return monodromy_presentation(m.alphas, flats, gens, wd.line_of_wire);
}

/// Semidirect-product presentation x_i^{y_j} = abar_j(x_i) of a linearly
/// fibered arrangement; wires bottom to top, then fibers by decreasing
/// projection value.
inline GroupPresentation fibered_presentation(const Arrangement& arr, const RationalVector& direction) {
    auto missing = missing_fibers(arr, direction);
    if (!missing.empty())
        throw InputError("arrangement is not linearly fibered over the direction: " + std::to_string(missing.size()) +
                         " fiber line(s) missing");
    auto wd = fibered_wiring_diagram(arr, direction);
    auto m = braid_monodromy(wd);
    const int n = static_cast<int>(wd.n);
    const std::size_t r = wd.fiber_lines.size();
    GroupPresentation P;
    P.kind = PresentationKind::Fibered;
    P.wires = wd.n;
    for (int w = 0; w < n; ++w)
        P.generators.push_back({arr.labels[static_cast<std::size_t>(wd.line_of_wire[static_cast<std::size_t>(w)])],
                                wd.line_of_wire[static_cast<std::size_t>(w)], false});
    for (std::size_t j = 0; j < r; ++j)
        P.generators.push_back({arr.labels[static_cast<std::size_t>(wd.fiber_lines[j])], wd.fiber_lines[j], true});
    P.fiber_monodromy.assign(r, PureBraid(n));
    for (std::size_t k = 0; k < wd.vertices.size(); ++k)
        P.fiber_monodromy[static_cast<std::size_t>(wd.fiber_of_vertex[k])] *= m.alphas[k];
    for (std::size_t j = 0; j < r; ++j) {
        auto img = artin_images(P.fiber_monodromy[j]);
        Word y = Word::generator(n + static_cast<int>(j));
        for (int i = 0; i < n; ++i)
            P.relators.push_back(Word::generator(i).conjugated_by(y) * img[static_cast<std::size_t>(i)].inverse());
    }
    return P;
}

}  // namespace charvar
