#ifndef QUIVERFAN_TESTS_CORPUS_HPP
#define QUIVERFAN_TESTS_CORPUS_HPP

#include "quiverfan/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace corpus {

using quiverfan::ArrowSpec;
using quiverfan::Quiver;

inline Quiver pentagon() {
    return Quiver({"1", "2", "3", "4"}, {{"a1", "1", "2"},
                                         {"a2", "1", "3"},
                                         {"a3", "2", "3"},
                                         {"a4", "2", "4"},
                                         {"a5", "3", "4"}});
}

inline Quiver kronecker() { return Quiver({"1", "2"}, {{"b1", "1", "2"}, {"b2", "1", "2"}}); }

inline Quiver kronecker3() {
    return Quiver({"1", "2"}, {{"c1", "1", "2"}, {"c2", "1", "2"}, {"c3", "1", "2"}});
}

inline Quiver kronecker_chain() {
    return Quiver({"1", "2", "3"}, {{"a1", "1", "2"}, {"a2", "1", "2"}, {"b1", "2", "3"}, {"b2", "2", "3"}});
}

inline Quiver single_arrow() { return Quiver({"1", "2"}, {{"a", "1", "2"}}); }

inline Quiver square() {
    return Quiver({"1", "2", "3", "4"}, {{"a", "1", "2"}, {"b", "1", "3"}, {"c", "2", "4"}, {"d", "3", "4"}});
}

inline Quiver triangle() { return Quiver({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}, {"c", "1", "3"}}); }

struct Named {
    std::string name;
    Quiver quiver;
};

inline std::vector<Named> all() {
    return {{"pentagon", pentagon()},     {"kronecker", kronecker()}, {"kronecker3", kronecker3()},
            {"kronecker_chain", kronecker_chain()}, {"single_arrow", single_arrow()},
            {"square", square()},         {"triangle", triangle()}};
}

inline quiverfan::Weight weight(std::initializer_list<long> values) {
    quiverfan::IntVector v(static_cast<quiverfan::Index>(values.size()));
    quiverfan::Index i = 0;
    for (long x : values) v(i++) = x;
    return quiverfan::Weight(v);
}

/// Random connected acyclic quiver: a random spanning tree plus extra arrows,
/// every arrow oriented along a hidden random vertex order.
inline Quiver random_quiver(std::mt19937_64& rng, int min_vertices, int max_vertices, int max_arrows) {
    const int n = std::uniform_int_distribution<int>(min_vertices, max_vertices)(rng);
    const int m = std::uniform_int_distribution<int>(n - 1, std::max(n - 1, max_arrows))(rng);
    std::vector<int> rank(static_cast<std::size_t>(n));
    std::iota(rank.begin(), rank.end(), 0);
    std::shuffle(rank.begin(), rank.end(), rng);

    std::vector<std::string> vertices;
    for (int v = 0; v < n; ++v) vertices.push_back("v" + std::to_string(v));
    std::vector<ArrowSpec> arrows;
    auto add = [&](int x, int y) {
        if (rank[static_cast<std::size_t>(x)] > rank[static_cast<std::size_t>(y)]) std::swap(x, y);
        arrows.push_back({"e" + std::to_string(arrows.size()), vertices[static_cast<std::size_t>(x)],
                          vertices[static_cast<std::size_t>(y)]});
    };
    for (int v = 1; v < n; ++v) add(v, std::uniform_int_distribution<int>(0, v - 1)(rng));
    std::uniform_int_distribution<int> pick(0, n - 1);
    while (static_cast<int>(arrows.size()) < m) {
        const int x = pick(rng);
        const int y = pick(rng);
        if (x != y) add(x, y);
    }
    return Quiver(vertices, arrows);
}

}  // namespace corpus

#endif  // QUIVERFAN_TESTS_CORPUS_HPP
