#include "pleth/type_tableau.hpp"

#include <stdexcept>

namespace pleth {

int type_cells(TypeT t) {
    switch (t) {
        case TypeT::R1: return 1;
        case TypeT::R2:
        case TypeT::C2: return 2;
        default: return 3;
    }
}

Partition type_shape(TypeT t) {
    switch (t) {
        case TypeT::R1: return {1};
        case TypeT::R2: return {2};
        case TypeT::C2: return {1, 1};
        case TypeT::R3: return {3};
        case TypeT::H21:
        case TypeT::H12: return {2, 1};
        case TypeT::C3: return {1, 1, 1};
    }
    throw std::logic_error("bad type");
}

std::string type_name(TypeT t) {
    switch (t) {
        case TypeT::R1: return "1";
        case TypeT::R2: return "12";
        case TypeT::C2: return "1/2";
        case TypeT::R3: return "123";
        case TypeT::H21: return "12/3";
        case TypeT::H12: return "13/2";
        case TypeT::C3: return "1/2/3";
    }
    throw std::logic_error("bad type");
}

TypeT conjugate_type(TypeT t) {
    switch (t) {
        case TypeT::R1: return TypeT::R1;
        case TypeT::R2: return TypeT::C2;
        case TypeT::C2: return TypeT::R2;
        case TypeT::R3: return TypeT::C3;
        case TypeT::C3: return TypeT::R3;
        case TypeT::H21: return TypeT::H12;
        case TypeT::H12: return TypeT::H21;
    }
    throw std::logic_error("bad type");
}

TypeT restrict2(TypeT t) {
    switch (t) {
        case TypeT::R3:
        case TypeT::H21: return TypeT::R2;  // entry 2 sits in row 1
        case TypeT::H12:
        case TypeT::C3: return TypeT::C2;
        default: throw std::invalid_argument("restrict2 needs a 3-cell type");
    }
}

std::vector<TypeT> enumerate_syt(int m) {
    switch (m) {
        case 1: return {TypeT::R1};
        case 2: return {TypeT::R2, TypeT::C2};
        case 3: return {TypeT::R3, TypeT::H21, TypeT::H12, TypeT::C3};
        default: throw std::invalid_argument("unsupported order (need 1 <= m <= 3)");
    }
}

long long count_f(const Partition& nu) {
    if (!is_partition(nu) || weight(nu) > 3) throw std::invalid_argument("count_f: |nu| must be <= 3");
    long long c = 0;
    for (TypeT t : enumerate_syt(static_cast<int>(weight(nu)))) {
        if (type_shape(t) == nu) ++c;
    }
    return c;
}

}  // namespace pleth
