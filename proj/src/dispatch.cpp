#include "heffter/dispatch.hpp"

#include <stdexcept>

#include "heffter/even_constructions.hpp"
#include "heffter/l_construction.hpp"
#include "heffter/low_rows.hpp"
#include "heffter/odd_even.hpp"
#include "heffter/verify.hpp"

namespace heffter {

ConstructionResult construct(Entry m, Entry n) {
    const Necessity nec = assert_necessity(m, n, HeffterClass::modular);
    if (!nec.allowed) throw std::invalid_argument("construct: " + nec.reason);

    if (m % 2 == 0 && n % 2 == 0) return build_even(m, n);

    if (m == 3) return build_3xn(n);
    if (n == 3) return transposed(build_3xn(m));
    if (m == 5) return build_5xn(n);
    if (n == 5) return transposed(build_5xn(m));

    if (m % 2 != n % 2) {
        // exactly one odd side; put it on the rows
        const bool swapped = (m % 2 == 0);
        const Entry om = swapped ? n : m, on = swapped ? m : n;
        ConstructionResult r = (on % 4 == 0) ? build_odd_0mod4(om, on) : build_odd_2mod4(om, on);
        return swapped ? transposed(r) : r;
    }

    // both odd, both >= 7 here
    if (m % 4 == 1 && n % 4 == 1) return build_1mod4_1mod4(m, n);
    if (m % 4 == 3 && n % 4 == 3) return build_3mod4_3mod4(m, n);
    if (m % 4 == 1) return build_1mod4_3mod4(m, n);
    return transposed(build_1mod4_3mod4(n, m));
}

}  // namespace heffter
