#pragma once

/**
 * @file chain.hpp
 * @brief Ket chains r A1 |K1> A2 |K2> ... evaluated with left-most precedence.
 *
 * Steps fold strictly left to right: a scale step multiplies the accumulated
 * cliffor on the right, a ket step applies its sandwich to it.  There is no
 * representation for bra steps; parsers reject them with MixedBraKetChain.
 */

#include "cl30/rotor.hpp"

#include <string>
#include <variant>
#include <vector>

namespace cl30 {

struct ScaleStep {
    Cliffor factor;
};

struct KetStep {
    Rotor rotor;
    std::string label;  // display only
};

using ChainStep = std::variant<ScaleStep, KetStep>;

struct KetChainExpr {
    Cliffor operand;
    std::vector<ChainStep> steps;
};

Cliffor eval_chain(const KetChainExpr& expr);

}  // namespace cl30
