#pragma once

#include <array>
#include <cstdint>
#include <utility>

// Published sporadic counts per volume (volumes not listed have none).
inline constexpr std::array<std::pair<std::int64_t, std::int64_t>, 257> kSporadicCounts = {{
    {24, 1}, {27, 1}, {29, 3}, {30, 2}, {31, 2}, {32, 3}, {33, 4}, {34, 5},
    {35, 3}, {37, 6}, {38, 8}, {39, 9}, {40, 1}, {41, 14}, {42, 5}, {43, 20},
    {44, 8}, {45, 6}, {46, 7}, {47, 30}, {48, 5}, {49, 17}, {50, 8}, {51, 16},
    {52, 6}, {53, 38}, {54, 11}, {55, 20}, {56, 3}, {57, 16}, {58, 13}, {59, 51},
    {60, 4}, {61, 38}, {62, 26}, {63, 17}, {64, 9}, {65, 27}, {66, 3}, {67, 41},
    {68, 13}, {69, 26}, {70, 4}, {71, 50}, {72, 3}, {73, 44}, {74, 18}, {75, 22},
    {76, 14}, {77, 19}, {78, 3}, {79, 55}, {80, 7}, {81, 18}, {82, 13}, {83, 60},
    {84, 7}, {85, 27}, {86, 11}, {87, 24}, {88, 5}, {89, 55}, {90, 6}, {91, 18},
    {92, 9}, {93, 17}, {94, 12}, {95, 35}, {96, 3}, {97, 46}, {98, 9}, {99, 13},
    {100, 8}, {101, 41}, {102, 3}, {103, 51}, {104, 8}, {105, 7}, {106, 8}, {107, 54},
    {108, 5}, {109, 44}, {110, 5}, {111, 13}, {112, 2}, {113, 40}, {114, 4}, {115, 21},
    {116, 11}, {117, 10}, {118, 9}, {119, 22}, {120, 3}, {121, 18}, {122, 9}, {123, 17},
    {124, 8}, {125, 25}, {127, 24}, {128, 9}, {129, 17}, {130, 2}, {131, 29}, {132, 5},
    {133, 14}, {134, 8}, {135, 6}, {136, 6}, {137, 28}, {138, 2}, {139, 37}, {140, 5},
    {141, 6}, {142, 9}, {143, 13}, {144, 1}, {145, 14}, {146, 5}, {147, 10}, {148, 7},
    {149, 26}, {150, 2}, {151, 19}, {152, 6}, {153, 9}, {154, 3}, {155, 12}, {156, 2},
    {157, 11}, {158, 10}, {159, 9}, {160, 3}, {161, 13}, {163, 17}, {164, 6}, {165, 1},
    {166, 7}, {167, 18}, {168, 3}, {169, 13}, {170, 2}, {171, 6}, {172, 3}, {173, 15},
    {174, 3}, {175, 8}, {176, 4}, {177, 5}, {178, 2}, {179, 21}, {180, 1}, {181, 13},
    {182, 5}, {183, 5}, {184, 5}, {185, 7}, {186, 2}, {187, 7}, {188, 5}, {189, 2},
    {190, 2}, {191, 8}, {192, 1}, {193, 12}, {194, 3}, {196, 4}, {197, 13}, {199, 11},
    {200, 4}, {201, 3}, {202, 2}, {203, 7}, {204, 1}, {205, 4}, {206, 4}, {207, 2},
    {208, 1}, {209, 10}, {211, 4}, {212, 2}, {213, 3}, {214, 2}, {215, 5}, {216, 1},
    {218, 5}, {219, 4}, {220, 1}, {221, 3}, {222, 1}, {223, 7}, {225, 2}, {226, 4},
    {227, 9}, {229, 6}, {230, 3}, {232, 1}, {233, 9}, {234, 1}, {235, 3}, {237, 1},
    {238, 2}, {239, 3}, {241, 6}, {244, 2}, {245, 3}, {247, 3}, {248, 3}, {249, 2},
    {250, 1}, {251, 5}, {254, 1}, {256, 2}, {257, 3}, {259, 2}, {261, 1}, {263, 7},
    {265, 1}, {267, 1}, {268, 1}, {269, 2}, {271, 4}, {272, 1}, {274, 1}, {275, 1},
    {278, 2}, {283, 2}, {287, 1}, {289, 4}, {290, 1}, {291, 1}, {292, 1}, {293, 5},
    {299, 2}, {304, 1}, {308, 1}, {310, 1}, {311, 1}, {313, 1}, {314, 1}, {317, 1},
    {319, 2}, {321, 1}, {323, 1}, {331, 1}, {332, 1}, {334, 2}, {335, 1}, {347, 1},
    {349, 2}, {353, 1}, {355, 1}, {356, 1}, {376, 1}, {377, 2}, {397, 1}, {398, 1},
    {419, 1},
}};

// Published singularity counts for prime volumes up to 419.
inline constexpr std::array<std::pair<std::int64_t, std::int64_t>, 63> kPrimeSingularities = {{
    {17, 0}, {19, 0}, {23, 0}, {29, 15}, {31, 10}, {37, 30}, {41, 66}, {43, 100},
    {47, 150}, {53, 190}, {59, 255}, {61, 186}, {67, 205}, {71, 250}, {73, 220}, {79, 275},
    {83, 300}, {89, 275}, {97, 230}, {101, 201}, {103, 255}, {107, 270}, {109, 220}, {113, 200},
    {127, 120}, {131, 145}, {137, 140}, {139, 185}, {149, 130}, {151, 95}, {157, 55}, {163, 85},
    {167, 90}, {173, 75}, {179, 105}, {181, 65}, {191, 40}, {193, 60}, {197, 65}, {199, 55},
    {211, 20}, {223, 35}, {227, 45}, {229, 30}, {233, 45}, {239, 15}, {241, 30}, {251, 25},
    {257, 15}, {263, 35}, {269, 10}, {271, 20}, {283, 10}, {293, 25}, {311, 5}, {313, 5},
    {317, 5}, {331, 5}, {347, 5}, {349, 10}, {353, 5}, {397, 5}, {419, 5},
}};
