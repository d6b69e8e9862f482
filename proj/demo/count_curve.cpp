// Classifies and counts a few curves over GF(3^5), then checks the closed-form
// order against the character-sum oracle.

#include <iostream>

#include "ss3/ss3.hpp"

int main()
{
    const auto ctx = ss3::FieldContext::make(5);
    std::cout << ss3::context_json(*ctx).dump() << "\n\n";

    for (const auto& entry : ss3::list_classes(*ctx)) {
        std::cout << ss3::type_name(entry.cls.type) << "  " << ss3::equation(entry.representative)
                  << "  #E = " << ss3::to_string(entry.count.order)
                  << "  (oracle " << ss3::to_string(ss3::naive_count(entry.representative)) << ")\n";
    }

    const ss3::ShortCurve e{ss3::parse_element(*ctx, "1,2,0,1,1"), ss3::parse_element(*ctx, "0,0,2,1,0")};
    const ss3::Canonical c = ss3::canonicalize(e);
    std::cout << '\n'
              << ss3::equation(e) << "\n  is isomorphic to " << ss3::equation(c.representative) << " via u = "
              << ss3::format_element(c.witness.u) << ", r = " << ss3::format_element(c.witness.r) << '\n';
}
