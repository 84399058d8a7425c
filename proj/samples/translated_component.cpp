// Certify the translated 1-torus of the deleted B3 arrangement and list the
// depth-2 points it shares with components through 1.

#include "charvar/io.hpp"
#include "charvar/pipeline.hpp"

#include <iostream>

int main() {
    using namespace charvar;
    AlexanderModel model(deleted_b3_arrangement());
    auto C = deleted_b3_translated_component();
    auto cert = certify_coset(model, C, 1);
    std::cout << C.parametrization_string() << "\n"
              << "certified: " << std::boolalpha << cert.certified << ", generic depth " << cert.generic_depth << "\n";

    auto analysis = analyze(model);
    auto report = char_poset_report(model, component_inputs(analysis));
    for (const auto& e : report.edges)
        if (std::find(e.members.begin(), e.members.end(), translated_id(analysis.translated.at(0))) != e.members.end())
            std::cout << format_character(e.point) << " depth " << e.depth << "\n";
    return cert.certified ? 0 : 1;
}
