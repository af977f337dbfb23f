#include "immpoly/limits.hpp"

namespace immpoly {

TractabilityCaps& global_caps() {
    static TractabilityCaps caps;
    return caps;
}

}  // namespace immpoly
