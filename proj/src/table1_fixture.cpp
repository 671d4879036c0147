#include "treenergy/comparator.hpp"

namespace treenergy {

// Reference column for the f(Delta) regression, Delta = 8..67. A copy lives
// in data/table1_reference.csv; a unit test keeps the two in sync.
const std::vector<Table1Row>& table1_reference() {
    static const std::vector<Table1Row> rows = {
        {8, -0.00377},  {9, -0.02418},  {10, -0.04352}, {11, -0.06168}, {12, -0.07866},
        {13, -0.09452}, {14, -0.10933}, {15, -0.12317}, {16, -0.13613}, {17, -0.14829},
        {18, -0.15972}, {19, -0.17048}, {20, -0.18063}, {21, -0.19022}, {22, -0.19931},
        {23, -0.20792}, {24, -0.21611}, {25, -0.22390}, {26, -0.23132}, {27, -0.23841},
        {28, -0.24518}, {29, -0.25165}, {30, -0.25786}, {31, -0.26381}, {32, -0.26953},
        {33, -0.27502}, {34, -0.28031}, {35, -0.28540}, {36, -0.29031}, {37, -0.29504},
        {38, -0.29961}, {39, -0.30403}, {40, -0.30830}, {41, -0.31244}, {42, -0.31644},
        {43, -0.32032}, {44, -0.32409}, {45, -0.32774}, {46, -0.33129}, {47, -0.33473},
        {48, -0.33808}, {49, -0.34134}, {50, -0.34451}, {51, -0.34759}, {52, -0.35060},
        {53, -0.35353}, {54, -0.35638}, {55, -0.35917}, {56, -0.36188}, {57, -0.36454},
        {58, -0.36713}, {59, -0.36965}, {60, -0.37213}, {61, -0.37454}, {62, -0.37691},
        {63, -0.37922}, {64, -0.38148}, {65, -0.38369}, {66, -0.38586}, {67, -0.38798},
    };
    return rows;
}

}  // namespace treenergy
