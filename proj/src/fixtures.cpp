#include "ngc/fixtures.hpp"

namespace ngc::fixtures {

const std::vector<std::string>& vector_graphs_2d() {
    static const std::vector<std::string> graphs = {
        "[0,1;2,3;1,3]", "[0,1;1,2;1,3]", "[0,3;2,3;2,3]", "[0,3;2,3;1,3]",
        "[0,2;2,3;1,3]", "[0,3;1,2;1,3]", "[0,3;2,3;1,2]", "[0,3;1,2;1,2]",
        "[0,2;2,3;1,2]", "[0,2;1,2;1,2]", "[0,1;1,3;1,2]", "[0,3;1,3;1,2]",
        "[0,1;1,3;2,3]", "[0,1;1,3;1,3]"};
    return graphs;
}

const std::vector<Combination>& relation_classes_2d() {
    static const std::vector<Combination> classes = {
        {{1, 1}, {5, 1}, {6, 1}, {7, -1}, {8, 2}, {12, 1}, {13, 1}},
        {{2, 1}, {4, 1}, {9, -1}, {11, 1}},
        {{3, 1}, {10, 1}, {14, 1}}};
    return classes;
}

const Combination& trivializing_combination_2d() {
    static const Combination c = {{1, 2}, {2, 1}};
    return c;
}

const Combination& trivializing_combination_2d_alt() {
    static const Combination c = {{11, 1}, {12, 2}};
    return c;
}

const Combination& kernel_generator_2d() {
    static const Combination c = {{3, 1}};
    return c;
}

const std::string& hamiltonian_graph_2d() {
    static const std::string g = "[1,2;1,2]";
    return g;
}

const std::map<int, std::string>& named_graphs_3d() {
    static const std::map<int, std::string> graphs = {
        {1, "[0,1,4;1,3,5;1,2,6]"},  {2, "[0,1,4;1,6,5;1,2,6]"},
        {4, "[0,1,4;1,6,5;4,2,6]"},  {7, "[0,1,4;4,3,5;4,2,6]"},
        {8, "[0,1,4;4,6,5;4,2,6]"},  {10, "[0,1,4;1,6,5;1,5,6]"},
        {16, "[0,1,4;4,6,5;4,5,6]"}, {17, "[0,2,4;1,3,5;1,2,6]"},
        {18, "[0,2,4;1,6,5;1,2,6]"}, {25, "[0,2,4;1,3,5;1,5,6]"},
        {26, "[0,2,4;1,6,5;1,5,6]"}, {29, "[0,2,4;4,3,5;1,5,6]"},
        {31, "[0,2,4;4,3,5;4,5,6]"}, {33, "[0,5,4;1,3,5;1,2,6]"},
        {34, "[0,5,4;1,6,5;1,2,6]"}, {41, "[0,5,4;1,3,5;1,5,6]"},
        {42, "[0,5,4;1,6,5;1,5,6]"}, {45, "[0,5,4;4,3,5;1,5,6]"}};
    return graphs;
}

const Combination& trivializing_combination_3d() {
    static const Combination c = {{1, 8},   {4, 24},  {7, 8},   {8, 24},
                                  {16, 12}, {17, 16}, {25, 16}, {26, 12},
                                  {29, 16}, {33, 24}};
    return c;
}

const std::vector<Combination>& kernel_combinations_3d() {
    static const std::vector<Combination> ys = {
        {{2, 1}, {18, 1}, {34, 1}, {41, 1}},
        {{4, 1}, {31, Rat(1, 2)}, {45, Rat(1, 2)}},
        {{10, 1}, {31, 1}, {34, 2}, {42, 2}, {45, 1}}};
    return ys;
}

const std::vector<std::string>& hamiltonian_graphs_3d() {
    static const std::vector<std::string> hs = {
        "[2,3,4;1,3,4]", "[2,3,4;2,3,4]", "[2,3,4;1,2,4]", "[1,3,4;1,2,4]",
        "[1,3,4;2,3,4]", "[1,2,3;1,2,4]", "[1,2,3;2,3,4]"};
    return hs;
}

const std::vector<Combination>& hamiltonian_relations_3d() {
    static const std::vector<Combination> rels = {
        {{1, 1}, {5, 1}}, {{3, 1}, {4, -1}, {7, -1}}};
    return rels;
}

const std::vector<Combination>& kernel_in_hamiltonians_3d() {
    static const std::vector<Combination> ys = {
        {{3, 1}}, {{1, Rat(1, 4)}}, {{1, Rat(1, 2)}, {2, -1}}};
    return ys;
}

const std::map<int, std::string>& named_graphs_4d() {
    static const std::map<int, std::string> graphs = {
        {2, "[0,1,4,7;1,6,5,8;1,2,6,9]"},  {4, "[0,1,4,7;1,6,5,8;4,2,6,9]"},
        {9, "[0,1,4,7;4,6,5,8;4,2,6,9]"},  {10, "[0,1,4,7;4,9,5,8;4,2,6,9]"},
        {12, "[0,1,4,7;4,6,5,8;7,2,6,9]"}, {14, "[0,1,4,7;1,6,5,8;1,5,6,9]"},
        {15, "[0,1,4,7;1,9,5,8;1,5,6,9]"}, {16, "[0,1,4,7;1,9,5,8;4,5,6,9]"},
        {18, "[0,1,4,7;1,9,5,8;7,5,6,9]"}, {20, "[0,1,4,7;4,9,5,8;4,5,6,9]"},
        {22, "[0,1,4,7;4,9,5,8;7,5,6,9]"}, {24, "[0,1,4,7;7,6,5,8;7,5,6,9]"},
        {26, "[0,2,4,7;1,6,5,8;1,2,6,9]"}, {31, "[0,2,4,7;4,6,5,8;7,2,6,9]"},
        {33, "[0,2,4,7;1,6,5,8;1,5,6,9]"}, {34, "[0,2,4,7;1,9,5,8;1,5,6,9]"},
        {35, "[0,2,4,7;1,9,5,8;4,5,6,9]"}, {36, "[0,2,4,7;1,9,5,8;7,5,6,9]"},
        {40, "[0,5,4,7;1,9,5,8;1,2,6,9]"}, {41, "[0,5,4,7;1,9,5,8;4,2,6,9]"},
        {42, "[0,5,4,7;4,3,5,8;4,2,6,9]"}, {43, "[0,5,4,7;4,9,5,8;4,2,6,9]"},
        {44, "[0,5,4,7;7,9,5,8;4,2,6,9]"}, {45, "[0,5,4,7;7,3,5,8;7,2,6,9]"},
        {46, "[0,5,4,7;7,6,5,8;7,2,6,9]"}, {47, "[0,2,4,7;4,3,5,8;1,5,6,9]"},
        {48, "[0,5,4,7;1,3,5,8;1,5,6,9]"}, {49, "[0,5,4,7;1,6,5,8;1,5,6,9]"},
        {50, "[0,5,4,7;1,9,5,8;1,5,6,9]"}, {54, "[0,5,4,7;4,9,5,8;7,5,6,9]"},
        {61, "[0,5,4,7;1,3,5,8;1,8,6,9]"}, {62, "[0,5,4,7;1,6,5,8;1,8,6,9]"},
        {63, "[0,5,4,7;7,3,5,8;7,8,6,9]"}, {64, "[0,5,4,7;7,6,5,8;7,8,6,9]"}};
    return graphs;
}

const std::vector<Combination>& kernel_combinations_4d() {
    static const std::vector<Combination> ys = {
        {{2, 1},
         {9, Rat(-1, 2)},
         {26, 1},
         {33, Rat(1, 2)},
         {35, 1},
         {36, -1},
         {40, 1},
         {41, -1},
         {42, Rat(1, 2)},
         {48, 1},
         {61, 1}},
        {{4, 1}, {9, Rat(1, 2)}, {35, -1}, {36, 1}, {41, 1}, {42, Rat(-1, 2)}},
        {{10, 1},        {16, -1}, {18, 1},  {20, 1},  {24, Rat(-1, 2)},
         {31, -1},       {34, -1}, {35, -1}, {36, 1},  {40, 2},
         {41, 1},        {43, -1}, {45, -1}, {46, 1},  {47, -1},
         {54, Rat(-1, 2)}, {61, -1}, {63, 1},  {64, Rat(-1, 2)}},
        {{12, 1},          {16, 1},  {18, -1}, {20, -1}, {24, Rat(1, 2)},
         {31, 1},          {35, 1},  {36, -1}, {43, 1},  {46, -1},
         {47, 1},          {54, Rat(1, 2)}, {63, -1}, {64, Rat(1, 2)}},
        {{14, 1}, {16, 4}, {18, -4}, {31, 4}, {33, 1}, {49, 2}, {62, 4}},
        {{15, 1}, {34, 1}, {50, 2}, {62, 2}},
        {{22, 1}, {44, -2}, {54, 1}, {64, 1}}};
    return ys;
}

const std::vector<std::string>& hamiltonian_graphs_4d() {
    static const std::vector<std::string> hs = {
        "[1,2,3,5;1,2,4,6]", "[1,2,3,5;2,3,4,6]", "[1,2,3,5;2,4,5,6]",
        "[1,3,4,5;2,3,4,6]", "[1,3,4,5;2,4,5,6]", "[1,3,5,6;2,4,5,6]",
        "[1,2,3,5;1,3,4,6]", "[1,2,3,5;1,4,5,6]", "[1,2,3,5;3,4,5,6]",
        "[1,3,4,5;1,3,4,6]", "[1,3,5,6;1,3,4,6]", "[1,3,4,5;1,4,5,6]",
        "[1,3,5,6;1,4,5,6]", "[1,3,4,5;3,4,5,6]", "[1,3,5,6;3,4,5,6]",
        "[2,3,4,5;1,3,4,6]", "[2,3,5,6;1,4,5,6]", "[2,3,4,5;1,4,5,6]",
        "[2,3,4,5;3,4,5,6]", "[2,3,5,6;3,4,5,6]", "[3,4,5,6;3,4,5,6]"};
    return hs;
}

const std::vector<Combination>& hamiltonian_relations_4d() {
    static const std::vector<Combination> rels = {
        {{2, 1}, {7, -1}},   {{3, 1}, {8, -1}},   {{4, 1}, {16, 1}},
        {{5, 1}, {18, 1}},   {{6, 1}, {17, 1}},   {{9, 0}},
        {{11, 1}, {12, 1}},  {{14, 1}, {19, 1}},  {{15, 1}, {20, 1}}};
    return rels;
}

const std::vector<int>& independent_hamiltonians_4d() {
    static const std::vector<int> set = {1, 2, 4, 5, 10, 11, 14, 21};
    return set;
}

const std::vector<Combination>& kernel_in_hamiltonians_4d() {
    static const std::vector<Combination> ys = {
        {{2, 1}, {4, Rat(1, 4)}},
        {{4, Rat(-1, 4)}},
        {{5, Rat(1, 2)}, {14, Rat(-1, 2)}, {21, Rat(-1, 16)}},
        {{14, Rat(1, 2)}, {21, Rat(1, 16)}},
        {{10, 1}},
        {{11, -1}},
        {{21, Rat(1, 8)}}};
    return ys;
}

const std::vector<int>& pair_rows_2d() {
    static const std::vector<int> rows = {2, 4, 9, 11};
    return rows;
}

const std::vector<int>& pair_columns_2d() {
    static const std::vector<int> cols = {1, 5, 6, 7, 8, 12, 13};
    return cols;
}

const std::vector<std::pair<int, int>>& solvable_pairs_3d() {
    static const std::vector<std::pair<int, int>> cells = {
        {2, 8}, {2, 12}, {11, 7}, {11, 8}, {11, 12}};
    return cells;
}

const std::vector<std::pair<int, int>>& solvable_pairs_4d() {
    static const std::vector<std::pair<int, int>> cells = {{2, 12}, {11, 12}};
    return cells;
}

}  // namespace ngc::fixtures
