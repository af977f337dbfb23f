// Regenerates the audit table shipped as data/hook_sign_audit.csv: run and
// redirect stdout over that file whenever the audit records change.  The
// hook-closed-forms verify suite asserts the shipped file matches.
#include <iostream>

#include "immpoly/hook.hpp"

int main() {
    std::cout << immpoly::sign_audit_csv();
    return 0;
}
