#include "cl30/chain.hpp"

namespace cl30 {

Cliffor eval_chain(const KetChainExpr& expr) {
    Cliffor acc = expr.operand;
    for (const auto& step : expr.steps) {
        if (const auto* s = std::get_if<ScaleStep>(&step)) {
            acc = acc * s->factor;
        } else {
            acc = rotate_cliffor(std::get<KetStep>(step).rotor, acc);
        }
    }
    return acc;
}

}  // namespace cl30
