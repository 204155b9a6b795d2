#pragma once

#include "qtilt/algebra.hpp"

#include <string>
#include <utility>
#include <vector>

namespace fixtures {

// The Auslander algebra of linear A_3 drawn by hand: 1->2, 2->3, 2->4, 3->5, 4->5, 5->6
// with 1->2->4 = 0, 4->5->6 = 0 and 2->3->5 = 2->4->5.
inline qtilt::AlgebraPtr auslander_a3_by_hand()
{
    using namespace qtilt;
    std::vector<Arrow> arrows{{"a", 0, 1}, {"b", 1, 2}, {"c", 1, 3}, {"e", 2, 4}, {"f", 3, 4}, {"g", 4, 5}};
    std::vector<Relation> rels{
        {0, 3, {{1, {0, 2}}}},
        {3, 5, {{1, {4, 5}}}},
        {1, 4, {{1, {1, 3}}, {-1, {2, 4}}}},
    };
    return Algebra::create({1, 2, 3, 4, 5, 6}, arrows, rels);
}

// The hand-drawn support-2-tilting lattice of that algebra. Summands are indices into its
// catalog: 0:"6" 1:"56" 2:"4" 3:"45" 4:"356" 5:"24" 6:"2345" 7:"1" 8:"12" 9:"123".
struct LatticeNode {
    char name;
    std::vector<int> summands;
};

inline const std::vector<LatticeNode>& figure_lattice_nodes()
{
    static const std::vector<LatticeNode> nodes{
        {'a', {}},
        {'b', {7}},
        {'c', {2}},
        {'d', {0}},
        {'e', {0, 7}},
        {'f', {1, 2, 3}},
        {'g', {0, 1, 3}},
        {'h', {5, 7, 8}},
        {'i', {2, 5, 8}},
        {'j', {0, 1, 4, 6, 7, 9}},
        {'q', {0, 4, 6, 7, 8, 9}},
        {'k', {1, 2, 3, 4, 6, 9}},
        {'m', {0, 1, 3, 4, 6, 9}},
        {'n', {4, 5, 6, 7, 8, 9}},
        {'o', {2, 4, 5, 6, 8, 9}},
        {'p', {2, 3, 4, 5, 6, 9}},
    };
    return nodes;
}

inline const std::vector<std::pair<char, char>>& figure_lattice_edges()
{
    static const std::vector<std::pair<char, char>> edges{
        {'a', 'b'}, {'a', 'c'}, {'a', 'd'}, {'b', 'e'}, {'d', 'e'}, {'c', 'f'}, {'f', 'g'}, {'d', 'g'},
        {'b', 'h'}, {'c', 'i'}, {'h', 'i'}, {'q', 'j'}, {'e', 'q'}, {'f', 'k'}, {'g', 'm'}, {'k', 'm'},
        {'j', 'm'}, {'o', 'p'}, {'p', 'k'}, {'n', 'q'}, {'h', 'n'}, {'i', 'o'}, {'n', 'o'},
    };
    return edges;
}

} // namespace fixtures
