// Semidirect product presentation and block Alexander matrix of a small
// fiber-type line arrangement: three horizontal-ish lines over two fibers.

#include "charvar/io.hpp"

#include <iostream>

int main() {
    using namespace charvar;
    // x + y = 4, y = 1, y = 3, and the fibers x = 3, x = 1
    auto arr = make_arrangement(2, false, {{1, 1, -4}, {0, 1, -1}, {0, 1, -3}, {1, 0, -3}, {1, 0, -1}});
    auto P = fibered_presentation(arr, {1, 0});
    std::cout << presentation_text(P);
    std::cout << laurent_matrix_text(block_alexander(P));
    return P.relators_homologically_trivial() ? 0 : 1;
}
