#include "tokenhom/presentation.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace tokenhom {

std::string Presentation::to_string() const {
    auto name = [](int g) {
        std::string out;
        --g;
        if (g < 26) out.push_back(static_cast<char>('a' + g));
        else out = "g" + std::to_string(g + 1);
        return out;
    };
    std::ostringstream out;
    out << "<";
    for (int g = 1; g <= n_generators; ++g) out << (g > 1 ? ", " : " ") << name(g);
    out << " |";
    bool first = true;
    for (const auto& relator : relators) {
        out << (first ? " " : ", ");
        first = false;
        if (relator.empty()) out << "1";
        for (size_t i = 0; i < relator.size(); ++i) {
            int g = relator[i];
            out << name(std::abs(g));
            if (g < 0) out << "^-1";
        }
    }
    out << " >";
    return out.str();
}

std::vector<int> free_reduce(std::vector<int> word) {
    std::vector<int> out;
    for (int g : word) {
        if (!out.empty() && out.back() == -g)
            out.pop_back();
        else
            out.push_back(g);
    }
    return out;
}

namespace {

std::vector<int> cyclic_reduce(std::vector<int> word) {
    word = free_reduce(std::move(word));
    while (word.size() >= 2 && word.front() == -word.back()) {
        word.erase(word.begin());
        word.pop_back();
        word = free_reduce(std::move(word));
    }
    return word;
}

// Canonical representative among rotations of the word and of its inverse:
// conjugation and inversion preserve the normal closure.
std::vector<int> canonical_relator(std::vector<int> word) {
    word = cyclic_reduce(std::move(word));
    if (word.empty()) return word;
    std::vector<int> best;
    auto consider = [&](const std::vector<int>& w) {
        for (size_t s = 0; s < w.size(); ++s) {
            std::vector<int> rot(w.begin() + s, w.end());
            rot.insert(rot.end(), w.begin(), w.begin() + s);
            if (best.empty() || rot < best) best = rot;
        }
    };
    consider(word);
    std::vector<int> inverse;
    for (auto it = word.rbegin(); it != word.rend(); ++it) inverse.push_back(-*it);
    consider(inverse);
    return best;
}

}  // namespace

Presentation presentation_from_complex(const TwoComplex& x) {
    if (!x.is_connected())
        throw std::invalid_argument("presentation_from_complex: complex must be connected");
    Graph skeleton(x.n_vertices);
    for (const EdgeId& e : x.edges) skeleton.add_edge(e.u, e.v);

    // BFS spanning tree from vertex 0
    std::vector<int> parent(x.n_vertices, -2);
    if (x.n_vertices > 0) parent[0] = -1;
    std::vector<int> queue{0};
    for (size_t qi = 0; qi < queue.size(); ++qi)
        for (int w : skeleton.neighbors(queue[qi]))
            if (parent[w] == -2) {
                parent[w] = queue[qi];
                queue.push_back(w);
            }
    auto is_tree_edge = [&](const EdgeId& e) {
        return parent[e.u] == e.v || parent[e.v] == e.u;
    };

    Presentation p;
    std::map<EdgeId, int> generator;  // non-tree edge -> 1-based generator
    for (const EdgeId& e : x.edges)
        if (!is_tree_edge(e)) generator.emplace(e, ++p.n_generators);

    for (const auto& walk : x.faces) {
        std::vector<int> word;
        int len = static_cast<int>(walk.size());
        for (int i = 0; i < len; ++i) {
            int u = walk[i], v = walk[(i + 1) % len];
            EdgeId e(u, v);
            auto it = generator.find(e);
            if (it == generator.end()) continue;  // tree edge contributes nothing
            word.push_back(u == e.u ? it->second : -it->second);
        }
        p.relators.push_back(free_reduce(std::move(word)));
    }
    return p;
}

namespace {

void renumber_without(Presentation& p, int removed_generator) {
    for (auto& relator : p.relators)
        for (int& g : relator) {
            int a = std::abs(g);
            if (a > removed_generator) g = g > 0 ? g - 1 : g + 1;
        }
    --p.n_generators;
}

// occurrence counts per generator (1-based)
std::vector<int> occurrences(const Presentation& p) {
    std::vector<int> count(p.n_generators + 1, 0);
    for (const auto& relator : p.relators)
        for (int g : relator) ++count[std::abs(g)];
    return count;
}

void normalize(Presentation& p) {
    for (auto& relator : p.relators) relator = canonical_relator(std::move(relator));
    std::sort(p.relators.begin(), p.relators.end(),
              [](const auto& a, const auto& b) {
                  return a.size() != b.size() ? a.size() < b.size() : a < b;
              });
    p.relators.erase(std::unique(p.relators.begin(), p.relators.end()), p.relators.end());
    std::erase_if(p.relators, [](const auto& r) { return r.empty(); });
}

// Substitute generator g (1-based) by `replacement` everywhere.
void substitute(Presentation& p, int g, const std::vector<int>& replacement) {
    for (auto& relator : p.relators) {
        std::vector<int> next;
        for (int letter : relator) {
            if (std::abs(letter) != g) {
                next.push_back(letter);
            } else if (letter > 0) {
                next.insert(next.end(), replacement.begin(), replacement.end());
            } else {
                for (auto it = replacement.rbegin(); it != replacement.rend(); ++it)
                    next.push_back(-*it);
            }
        }
        relator = free_reduce(std::move(next));
    }
}

}  // namespace

Presentation tietze_simplify(Presentation p, int budget) {
    for (int pass = 0; pass < budget; ++pass) {
        normalize(p);
        bool changed = false;

        // generators occurring exactly once overall: solve and drop
        auto count = occurrences(p);
        for (int g = 1; g <= p.n_generators && !changed; ++g) {
            if (count[g] != 1) continue;
            for (size_t r = 0; r < p.relators.size(); ++r) {
                auto it = std::find_if(p.relators[r].begin(), p.relators[r].end(),
                                       [&](int x) { return std::abs(x) == g; });
                if (it == p.relators[r].end()) continue;
                p.relators.erase(p.relators.begin() + r);
                renumber_without(p, g);
                changed = true;
                break;
            }
        }
        if (changed) continue;

        // bounded substitution: a relator in which some generator appears
        // exactly once defines that generator; shortest relator first
        for (size_t r = 0; r < p.relators.size() && !changed; ++r) {
            const auto& relator = p.relators[r];
            for (size_t i = 0; i < relator.size(); ++i) {
                int g = std::abs(relator[i]);
                int in_relator = 0;
                for (int letter : relator) in_relator += std::abs(letter) == g;
                if (in_relator != 1) continue;
                // rotate so the relator reads (eps*g) * rest = 1, hence
                // g = rest^-1 when eps = +1 and g = rest when eps = -1
                std::vector<int> rest;
                for (size_t k = 1; k < relator.size(); ++k)
                    rest.push_back(relator[(i + k) % relator.size()]);
                std::vector<int> replacement;
                if (relator[i] > 0)
                    for (auto it = rest.rbegin(); it != rest.rend(); ++it)
                        replacement.push_back(-*it);
                else
                    replacement = rest;
                std::vector<std::vector<int>> kept;
                for (size_t k = 0; k < p.relators.size(); ++k)
                    if (k != r) kept.push_back(p.relators[k]);
                p.relators = std::move(kept);
                substitute(p, g, replacement);
                renumber_without(p, g);
                changed = true;
                break;
            }
        }
        if (!changed) break;
    }
    normalize(p);
    return p;
}

AbelianGroupDesc abelianize(const Presentation& p) {
    IntMatrix m(static_cast<int>(p.relators.size()), p.n_generators);
    for (size_t r = 0; r < p.relators.size(); ++r)
        for (int g : p.relators[r])
            m.at(static_cast<int>(r), std::abs(g) - 1) += g > 0 ? 1 : -1;
    SnfResult snf = smith_normal_form(m);
    AbelianGroupDesc out;
    out.free_rank = p.n_generators - snf.rank;
    out.torsion = snf.nontrivial_factors();
    return out;
}

}  // namespace tokenhom
