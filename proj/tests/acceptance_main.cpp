#include <iostream>

#include "hess/selftest.hpp"

int main() {
    const auto results = hess::selftest::run_all();
    hess::selftest::print_results(results, std::cout);
    return hess::selftest::all_pass(results) ? 0 : 1;
}
