#include "qe/registry.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qe {

namespace {

const IntMatrix kGammaM = {
    {0, 1, 0, 1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 1, 0, 1},
    {1, 0, 0, 1, 1, 1, 0, 0, 1, 1, 0, 0, 0, 1, 1, 0},
    {0, 0, 1, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 0, 1, 1},
    {1, 1, 0, 1, 0, 0, 0, 1, 0, 1, 1, 1, 0, 1, 0, 0},
    {0, 1, 1, 1, 1, 0, 0, 0, 1, 1, 1, 0, 0, 0, 0, 1},
    {1, 1, 1, 1, 0, 1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 0},
    {0, 0, 0, 1, 0, 0, 1, 0, 1, 0, 1, 1, 0, 1, 1, 1},
    {1, 0, 1, 1, 1, 0, 1, 1, 0, 0, 1, 0, 0, 0, 1, 0},
    {0, 1, 0, 0, 0, 1, 0, 0, 1, 1, 0, 1, 1, 1, 0, 1},
    {1, 1, 1, 0, 1, 1, 0, 1, 0, 1, 0, 0, 1, 0, 0, 0},
    {0, 0, 0, 0, 1, 0, 0, 1, 0, 1, 1, 0, 1, 1, 1, 1},
    {1, 0, 0, 0, 0, 1, 1, 1, 0, 0, 0, 1, 1, 1, 1, 0},
    {0, 0, 1, 0, 1, 1, 1, 0, 1, 0, 0, 0, 1, 0, 1, 1},
    {1, 1, 0, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 1, 0, 0},
    {0, 1, 1, 0, 0, 0, 1, 1, 0, 0, 1, 1, 1, 0, 0, 1},
    {1, 0, 1, 0, 0, 0, 0, 0, 1, 1, 1, 1, 1, 0, 1, 0},
};

const IntMatrix kCase1 = {
    {2, 1, 0, 1, 0, 1, 0, 0, 0, 0},
    {-1, 0, 0, -1, 0, -1, 0, 0, 0, 0},
    {0, 0, 1, 0, 0, 0, 0, 0, 0, 0},
    {-1, -1, 0, 0, 0, -1, 0, 0, 0, 0},
    {0, 0, 0, 0, 1, 0, 0, 0, 0, 0},
    {-1, -1, 0, -1, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 1, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 1, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 1, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
};

const IntMatrix kCase2B = {
    {3, 0, 0, 1, 1, 0, 2, 1, 1, 0},
    {0, 1, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 1, 0, 0, 0, 0, 0, 0, 0},
    {-1, 0, 0, 0, -1, 0, -1, 0, 0, 0},
    {-1, 0, 0, -1, 0, 0, -1, 0, 0, 0},
    {-1, 0, 0, 0, 0, 0, -1, 0, -1, 0},
    {-1, 0, 0, 0, 0, 0, -1, -1, 0, 0},
    {0, 0, 0, 0, 0, 1, 0, 0, 0, 0},
    {-2, 0, 0, -1, -1, 0, -1, -1, -1, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
};

const IntMatrix kCase2C = {
    {5, 2, 0, 3, 1, 0, 2, 2, 1, 1},
    {-2, -1, 0, -1, -1, 0, -1, -1, 0, 0},
    {0, 0, 1, 0, 0, 0, 0, 0, 0, 0},
    {-1, 0, 0, -1, 0, 0, 0, -1, 0, 0},
    {-1, 0, 0, -1, 0, 0, -1, 0, 0, 0},
    {-2, -1, 0, -1, 0, 0, -1, -1, 0, -1},
    {-2, -1, 0, -1, 0, 0, -1, -1, -1, 0},
    {-3, -1, 0, -2, -1, 0, -1, -1, -1, -1},
    {-1, -1, 0, -1, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 1, 0, 0, 0, 0},
};

const IntMatrix kCase2D = {
    {2, 1, 0, 1, 0, 0, 1, 0, 0, 0},
    {-1, 0, 0, -1, 0, 0, -1, 0, 0, 0},
    {0, 0, 1, 0, 0, 0, 0, 0, 0, 0},
    {-1, -1, 0, 0, 0, 0, -1, 0, 0, 0},
    {0, 0, 0, 0, 1, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 1, 0, 0, 0, 0},
    {-1, -1, 0, -1, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 1, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 1, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
};

const IntMatrix kCase3B = {
    {3, 0, 0, 0, 2, 1, 1, 0, 1, 1},
    {-1, 0, 0, 0, -1, 0, 0, 0, 0, -1},
    {-1, 0, 0, 0, -1, 0, 0, 0, -1, 0},
    {0, 1, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 1, 0, 0, 0, 0, 0, 0, 0},
    {-1, 0, 0, 0, -1, 0, -1, 0, 0, 0},
    {-1, 0, 0, 0, -1, -1, 0, 0, 0, 0},
    {0, 0, 0, 1, 0, 0, 0, 0, 0, 0},
    {-2, 0, 0, 0, -1, -1, -1, 0, -1, -1},
    {0, 0, 0, 0, 0, 0, 0, 1, 0, 0},
};

const IntMatrix kCase3C = {
    {2, 1, 0, 1, 0, 0, 0, 0, 1, 0},
    {-1, -1, 0, -1, 0, 0, 0, 0, 0, 0},
    {0, 0, 1, 0, 0, 0, 0, 0, 0, 0},
    {-1, -1, 0, 0, 0, 0, 0, 0, -1, 0},
    {0, 0, 0, 0, 1, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 1, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 1, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 1, 0, 0},
    {-1, 0, 0, -1, 0, 0, 0, 0, -1, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
};

const IntMatrix kCase3D = {
    {2, 1, 1, 0, 0, 0, 0, 0, 1, 0},
    {-1, -1, -1, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 1, 0, 0, 0, 0, 0, 0},
    {-1, 0, -1, 0, 0, 0, 0, 0, -1, 0},
    {-1, -1, 0, 0, 0, 0, 0, 0, -1, 0},
    {0, 0, 0, 0, 1, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 1, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 1, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 1, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
};

const IntMatrix kCase4 = {
    {2, 0, 0, 0, 1, 1, 0, 0, 1, 0},
    {-1, 0, 0, 0, -1, -1, 0, 0, 0, 0},
    {0, 1, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 1, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 1, 0, 0, 0, 0, 0, 0},
    {-1, 0, 0, 0, 0, -1, 0, 0, -1, 0},
    {-1, 0, 0, 0, -1, 0, 0, 0, -1, 0},
    {0, 0, 0, 0, 0, 0, 1, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 1, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
};

const IntMatrix kCase5 = {
    {2, 1, 0, 1, 1, 0, 0, 0, 0, 0},
    {-1, -1, 0, 0, -1, 0, 0, 0, 0, 0},
    {-1, -1, 0, -1, 0, 0, 0, 0, 0, 0},
    {0, 0, 1, 0, 0, 0, 0, 0, 0, 0},
    {-1, 0, 0, -1, -1, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 1, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 1, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 1, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 1, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
};

const IntMatrix kCase6 = {
    {3, 0, 2, 1, 1, 1, 1, 0, 0, 0},
    {-1, 0, -1, 0, 0, 0, -1, 0, 0, 0},
    {-1, 0, -1, 0, 0, -1, 0, 0, 0, 0},
    {-1, 0, -1, 0, -1, 0, 0, 0, 0, 0},
    {-1, 0, -1, -1, 0, 0, 0, 0, 0, 0},
    {0, 1, 0, 0, 0, 0, 0, 0, 0, 0},
    {-2, 0, -1, -1, -1, -1, -1, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 1, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 1, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
};

const IntMatrix kA2x4B = {
    {3, 0, 2, 1, 0, 1, 0, 1, 0, 1},
    {-1, 0, -1, -1, 0, 0, 0, 0, 0, 0},
    {0, 1, 0, 0, 0, 0, 0, 0, 0, 0},
    {-1, 0, -1, 0, 0, -1, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 1, 0},
    {-1, 0, -1, 0, 0, 0, 0, -1, 0, 0},
    {0, 0, 0, 0, 0, 0, 1, 0, 0, 0},
    {-2, 0, -1, -1, 0, -1, 0, -1, 0, -1},
    {-1, 0, -1, 0, 0, 0, 0, 0, 0, -1},
    {0, 0, 0, 0, 1, 0, 0, 0, 0, 0},
};

const IntMatrix kA2x4C = {
    {4, 0, 2, 2, 0, 1, 0, 1, 1, 2},
    {-2, 0, -1, -1, 0, 0, 0, -1, -1, -1},
    {-1, 0, -1, -1, 0, 0, 0, 0, 0, 0},
    {0, 1, 0, 0, 0, 0, 0, 0, 0, 0},
    {-2, 0, -1, -1, 0, -1, 0, -1, 0, -1},
    {-1, 0, -1, 0, 0, 0, 0, 0, 0, -1},
    {0, 0, 0, 0, 1, 0, 0, 0, 0, 0},
    {-2, 0, -1, -1, 0, -1, 0, 0, -1, -1},
    {-1, 0, 0, -1, 0, 0, 0, 0, 0, -1},
    {0, 0, 0, 0, 0, 0, 1, 0, 0, 0},
};

const IntMatrix kA2e6B = {
    {3, 1, 1, 1, 0, 0, 0, 2, 1, 0},
    {-1, 0, 0, -1, 0, 0, 0, -1, 0, 0},
    {-1, 0, -1, 0, 0, 0, 0, -1, 0, 0},
    {-1, -1, 0, 0, 0, 0, 0, -1, 0, 0},
    {0, 0, 0, 0, 1, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 1, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 1, 0, 0, 0},
    {-2, -1, -1, -1, 0, 0, 0, -1, -1, 0},
    {-1, 0, 0, 0, 0, 0, 0, -1, -1, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
};

const IntMatrix kA2e6C = {
    {2, 0, 0, 0, 1, 1, 0, 1, 0, 0},
    {-1, 0, 0, 0, 0, -1, 0, -1, 0, 0},
    {-1, 0, 0, 0, -1, 0, 0, -1, 0, 0},
    {0, 1, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 1, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 1, 0, 0, 0, 0, 0, 0},
    {-1, 0, 0, 0, -1, -1, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 1, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 1, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
};

using Part = std::pair<std::string, int>;

SurfaceConfiguration make_config(const std::string& name, int p, const std::string& dynkin,
                                 const std::vector<std::vector<Part>>& fibers)
{
    SurfaceConfiguration c;
    c.name = name;
    c.characteristic = p;
    c.dynkin_label = dynkin;
    for (const auto& fib : fibers) {
        Fiber f;
        for (const auto& [label, mark] : fib) {
            f.members.push_back(static_cast<int>(c.neg_two.size()));
            f.marks.push_back(mark);
            c.neg_two.push_back(parse_label(label));
        }
        c.fibers.push_back(f);
    }
    return c;
}

std::vector<Part> a1(const std::string& u, const std::string& v) { return {{u, 1}, {v, 1}}; }

std::vector<Part> a2(const std::string& u, const std::string& v, const std::string& w)
{
    return {{u, 1}, {v, 1}, {w, 1}};
}

std::vector<ConfigEntry> build_configs()
{
    std::vector<ConfigEntry> out;
    {
        ConfigEntry e;
        e.config = make_config("A1~^8", 2, "A1~^8",
                               {a1("l-127", "2l-345689"), a1("l-347", "2l-125689"), a1("l-567", "2l-123489"),
                                a1("l-789", "2l-123456"), a1("3l-2e1-e3-e4-e5-e6-e7-e8-e9", "e1-e2"),
                                a1("3l-e1-e2-2e3-e5-e6-e7-e8-e9", "e3-e4"), a1("3l-e1-e2-e3-e4-2e5-e7-e8-e9", "e5-e6"),
                                a1("3l-e1-e2-e3-e4-e5-e6-e7-2e8", "e8-e9")});
        e.expected_mw_order = 16;
        e.expected_blowdown_classes = 2;
        e.printed_sections = {"e2",      "e4",      "e6",       "e7",       "e9",       "l-13",     "l-15",    "l-18",
                              "l-35",    "l-58",    "2l-12358", "2l-13458", "2l-13568", "2l-13578", "2l-13589"};
        e.printed_gamma_m = kGammaM;
        e.printed_blowdown_sets = {{"e9", "e8-e9", "e7", "e6", "e5-e6", "e4", "e3-e4", "e2", "e1-e2"},
                                   {"e9", "e8-e9", "e7", "e6", "e4", "e2", "l-13", "l-15", "l-35"}};
        e.printed_matrices = {kCase1};
        e.printed_relabelings = {
            {{"l-127", "2l-345689", "l-347", "2l-125689", "l-567", "2l-123489", "2l-135789", "l-246", "2l-146789",
              "l-235", "2l-236789", "l-145", "2l-245789", "l-136", "-K-e7+e8", "e8-e9"},
             {{"-K-e7+e8", "3l-e1-e2-e3-e4-e5-e6-e7-2e8"}}}};
        out.push_back(e);
    }
    {
        ConfigEntry e;
        e.config = make_config("A1~^4+D4~", 2, "A1~^4+D4~",
                               {{{"e7-e8", 2}, {"e6-e7", 1}, {"e8-e9", 1}, {"2l-123467", 1}, {"l-567", 1}},
                                a1("l-125", "2l-346789"), a1("l-345", "2l-126789"), a1("e3-e4", "-K-e3+e4"),
                                a1("e1-e2", "-K-e1+e2")});
        e.expected_mw_order = 8;
        e.expected_blowdown_classes = 4;
        e.printed_sections = {"e2", "e4", "e5", "e9", "l-13", "l-16", "l-36", "2l-13678"};
        e.printed_blowdown_sets = {{"e2", "e1-e2", "e4", "e3-e4", "e5", "e9", "e8-e9", "e7-e8", "e6-e7"},
                                   {"e9", "2l-346789", "l-36", "e3-e4", "e2", "e1-e2", "e5", "l-567", "e7-e8"},
                                   {"e2", "2l-123467", "l-36", "e6-e7", "2l-13678", "e8-e9", "l-13", "2l-346789", "e5"},
                                   {"e9", "e8-e9", "e7-e8", "l-36", "l-16", "e2", "e4", "l-13", "e5"}};
        e.printed_matrices = {kCase2B, kCase2C, kCase2D};
        e.printed_relabelings = {
            {{"l-345", "l-589", "e5-e6", "l-125", "e6-e7", "-K-e8+e9", "e8-e9", "l-567", "2l-123489", "e3-e4",
              "-K-e3+e4", "e1-e2", "-K-e1+e2"},
             {}},
            {{"e3-e4", "e5-e6", "l-135", "e1-e2", "l-789", "-K-e7+e8", "e7-e8", "l-569", "2l-123478", "2l-345678",
              "l-129", "2l-125678", "l-349"},
             {}},
            {{"l-137", "e8-e9", "e7-e8", "l-247", "l-567", "l-125", "2l-346789", "l-345", "2l-126789", "l-146",
              "2l-235789", "l-236", "2l-145789"},
             {}}};
        out.push_back(e);
    }
    {
        ConfigEntry e;
        e.config = make_config("A1~^2+D6~", 2, "A1~^2+D6~",
                               {{{"e6-e7", 1},
                                 {"l-345", 1},
                                 {"e5-e6", 2},
                                 {"e4-e5", 2},
                                 {"l-148", 2},
                                 {"e8-e9", 1},
                                 {"e1-e2", 1}},
                                a1("2l-456789", "l-123"), a1("2l-124567", "l-389")});
        e.expected_mw_order = 4;
        e.expected_blowdown_classes = 4;
        e.printed_sections = {"e2", "e3", "e7", "e9"};
        e.printed_blowdown_sets = {{"e2", "e1-e2", "e3", "e7", "e6-e7", "e5-e6", "e4-e5", "e9", "e8-e9"},
                                   {"e2", "e1-e2", "l-148", "e8-e9", "e3", "l-345", "e5-e6", "e7", "2l-456789"},
                                   {"e2", "l-123", "e7", "e6-e7", "e5-e6", "e4-e5", "l-148", "e9", "l-389"},
                                   {"e3", "l-123", "e7", "e6-e7", "e5-e6", "e4-e5", "l-148", "e1-e2", "e9"}};
        e.printed_matrices = {kCase3B, kCase3C, kCase3D};
        e.printed_relabelings = {
            {{"l-589", "e6-e7", "e5-e6", "l-125", "e2-e3", "e1-e2", "e3-e4", "e8-e9", "-K-e8+e9", "2l-123489", "l-567"},
             {}},
            {{"e6-e7", "l-345", "e5-e6", "e4-e5", "e3-e4", "l-389", "l-123", "-K-e1+e2", "e1-e2", "-K-e8+e9", "e8-e9"},
             {}},
            {{"e7-e8", "2l-123456", "e6-e7", "e5-e6", "e4-e5", "l-349", "e3-e4", "-K-e1+e2", "e1-e2", "2l-345678",
              "l-129"},
             {}}};
        out.push_back(e);
    }
    {
        ConfigEntry e;
        e.config = make_config("D4~^2", 2, "D4~^2",
                               {{{"l-468", 2}, {"e6-e7", 1}, {"e8-e9", 1}, {"e4-e5", 1}, {"l-123", 1}},
                                {{"e1-e2", 2}, {"l-189", 1}, {"l-167", 1}, {"l-145", 1}, {"e2-e3", 1}}});
        e.expected_mw_order = 4;
        e.expected_blowdown_classes = 2;
        e.printed_sections = {"e3", "e5", "e7", "e9"};
        e.printed_blowdown_sets = {{"e3", "e2-e3", "e1-e2", "e5", "e4-e5", "e7", "e6-e7", "e9", "e8-e9"},
                                   {"e3", "e2-e3", "e1-e2", "l-145", "e7", "e6-e7", "l-468", "e4-e5", "e9"}};
        e.printed_matrices = {kCase4};
        e.printed_relabelings = {{{"e7-e8", "l-569", "e6-e7", "e5-e6", "2l-123456", "l-129", "2l-125678", "e2-e3",
                                   "e1-e2", "e3-e4"},
                                  {}}};
        out.push_back(e);
    }
    {
        ConfigEntry e;
        e.config = make_config("A1~+E7~", 2, "A1~+E7~",
                               {{{"e8-e9", 1},
                                 {"e7-e8", 2},
                                 {"e6-e7", 3},
                                 {"e5-e6", 4},
                                 {"e4-e5", 3},
                                 {"e3-e4", 2},
                                 {"l-123", 1},
                                 {"l-345", 2}},
                                a1("-K-e1+e2", "e1-e2")});
        e.expected_mw_order = 2;
        e.expected_blowdown_classes = 2;
        e.prose_blowdown_count = 4;
        e.printed_sections = {"e2", "e9"};
        e.printed_blowdown_sets = {{"e2", "e1-e2", "e9", "e8-e9", "e7-e8", "e6-e7", "e5-e6", "e4-e5", "e3-e4"},
                                   {"e2", "l-123", "e3-e4", "e9", "e8-e9", "e7-e8", "e6-e7", "e5-e6", "l-345"}};
        e.printed_matrices = {kCase5};
        e.printed_relabelings = {
            {{"e8-e9", "e7-e8", "e6-e7", "e5-e6", "l-145", "e1-e2", "e2-e3", "e4-e5", "2l-456789", "l-123"}, {}}};
        out.push_back(e);
    }
    {
        ConfigEntry e;
        e.config = make_config("D8~", 2, "D8~",
                               {{{"l-123", 1},
                                 {"e2-e3", 1},
                                 {"e3-e4", 2},
                                 {"e4-e5", 2},
                                 {"e5-e6", 2},
                                 {"e6-e7", 2},
                                 {"e7-e8", 2},
                                 {"e8-e9", 1},
                                 {"2l-234567", 1}}});
        e.expected_mw_order = 2;
        e.expected_blowdown_classes = 2;
        e.printed_sections = {"e1", "e9"};
        e.printed_blowdown_sets = {{"e1", "e9", "e8-e9", "e7-e8", "e6-e7", "e5-e6", "e4-e5", "e3-e4", "e2-e3"},
                                   {"e1", "l-123", "e3-e4", "e4-e5", "e5-e6", "e9", "e8-e9", "e7-e8", "2l-234567"}};
        e.printed_matrices = {kCase6};
        e.printed_relabelings = {
            {{"e4-e5", "l-123", "e3-e4", "e2-e3", "e1-e2", "l-167", "e7-e8", "e8-e9", "e6-e7"}, {}}};
        out.push_back(e);
    }
    auto e8 = [](const std::string& name, int p) {
        ConfigEntry e;
        e.config = make_config(name, p, "E8~",
                               {{{"e1-e2", 2},
                                 {"e2-e3", 4},
                                 {"e3-e4", 6},
                                 {"e4-e5", 5},
                                 {"e5-e6", 4},
                                 {"e6-e7", 3},
                                 {"e7-e8", 2},
                                 {"e8-e9", 1},
                                 {"l-123", 3}}});
        e.expected_mw_order = 1;
        e.expected_blowdown_classes = 1;
        e.printed_sections = {"e9"};
        e.printed_blowdown_sets = {{"e9", "e8-e9", "e7-e8", "e6-e7", "e5-e6", "e4-e5", "e3-e4", "e2-e3", "e1-e2"}};
        return e;
    };
    out.push_back(e8("E8~", 2));
    {
        ConfigEntry e;
        e.config = make_config("A2~^4", 3, "A2~^4",
                               {a2("l-123", "l-456", "l-789"), a2("l-147", "l-258", "l-369"),
                                a2("l-159", "l-267", "l-348"), a2("l-168", "l-249", "l-357")});
        e.expected_mw_order = 9;
        e.expected_blowdown_classes = 3;
        e.printed_sections = {"e1", "e2", "e3", "e4", "e5", "e6", "e7", "e8", "e9"};
        e.printed_blowdown_sets = {{"e1", "e2", "e3", "e4", "e5", "e6", "e7", "e8", "e9"},
                                   {"e1", "l-123", "e8", "l-258", "e6", "l-267", "e4", "l-249", "l-357"},
                                   {"e1", "l-123", "l-789", "e4", "l-249", "l-357", "e6", "l-369", "l-258"}};
        e.printed_matrices = {kA2x4B, kA2x4C};
        e.printed_relabelings = {{{"e1-e2", "2l-156789", "l-134", "2l-123789", "e3-e4", "l-356", "l-125", "e5-e6",
                                   "2l-345789", "-K-e7+e9", "e8-e9", "e7-e8"},
                                  {}},
                                 {{"e2-e3", "-K-e1+e3", "e1-e2", "-K-e7+e9", "e7-e8", "e8-e9", "l-123", "l-789",
                                   "l-456", "-K-e4+e6", "e5-e6", "e4-e5"},
                                  {}}};
        out.push_back(e);
    }
    {
        ConfigEntry e;
        e.config = make_config("A2~+E6~", 3, "A2~+E6~",
                               {a2("l-123", "l-456", "l-789"),
                                {{"l-147", 3},
                                 {"e1-e2", 2},
                                 {"e2-e3", 1},
                                 {"e4-e5", 2},
                                 {"e5-e6", 1},
                                 {"e7-e8", 2},
                                 {"e8-e9", 1}}});
        e.expected_mw_order = 3;
        e.expected_blowdown_classes = 3;
        e.printed_sections = {"e3", "e6", "e9"};
        e.printed_blowdown_sets = {{"e3", "e2-e3", "e1-e2", "e6", "e5-e6", "e4-e5", "e9", "e8-e9", "e7-e8"},
                                   {"e6", "e5-e6", "e4-e5", "l-147", "e1-e2", "e2-e3", "e9", "l-789", "l-123"},
                                   {"e3", "e2-e3", "e1-e2", "l-147", "e4-e5", "e6", "l-456", "e9", "e8-e9"}};
        e.printed_matrices = {kA2e6B, kA2e6C};
        e.printed_relabelings = {{{"e7-e8", "e8-e9", "-K-e7+e9", "e1-e2", "e2-e3", "e3-e4", "l-123", "l-789",
                                   "e4-e5", "e5-e6"},
                                  {}},
                                 {{"2l-123456", "l-689", "e6-e7", "e4-e5", "e3-e4", "e2-e3", "l-128", "e8-e9",
                                   "e1-e2", "l-167"},
                                  {}}};
        out.push_back(e);
    }
    out.push_back(e8("E8~char3", 3));
    return out;
}

using FT = FiberType;
const std::vector<FT> kLineConic = {FT::LineConic, FT::LineTangentConic};
const std::vector<FT> kAnyLines = {FT::ThreeGeneralLines, FT::ThreeConcurrentLines};

PencilExample pencil(const std::string& name, const std::string& config, int p, int degree,
                     std::vector<std::string> gens, std::vector<std::vector<FT>> types)
{
    PencilExample e;
    e.name = name;
    e.config = config;
    e.characteristic = p;
    e.field_degree = degree;
    e.generators = std::move(gens);
    e.fiber_types = std::move(types);
    // smallest extension of at least 3 with more than 12 members
    uint64_t q = 1;
    for (int i = 0; i < degree; ++i)
        q *= p;
    e.analysis_extension = 3;
    uint64_t qq = q * q * q;
    while (qq + 1 <= 12) {
        qq *= q;
        ++e.analysis_extension;
    }
    return e;
}

std::vector<PencilExample> build_pencils()
{
    std::vector<PencilExample> out;
    {
        // a, b, c written as A, B, t
        PencilExample e = pencil("A1~^8/1", "A1~^8", 2, 3,
                                 {"A^2(xy+xz+yz)+(AB+At+Bt)x^2", "B^2(xy+xz+yz)+(AB+At+Bt)y^2"}, {});
        e.parameters = {{'A', "1"}, {'B', "g"}, {'t', "g^2"}};
        e.analysis_extension = 2;
        out.push_back(e);
        e = pencil("A1~^8/2", "A1~^8", 2, 3,
                   {"(At+t^2)(x^2y+xy^2)+(AB+B^2)(x^2z+xz^2)", "(Bt+t^2)(x^2y+xy^2)+(AB+B^2)(y^2z+yz^2)"}, {});
        e.parameters = {{'A', "1"}, {'B', "g"}, {'t', "g^2"}};
        e.analysis_extension = 2;
        out.push_back(e);
    }
    out.push_back(pencil("A1~^4+D4~/1", "A1~^4+D4~", 2, 2, {"x^2z+xy^2", "x^2z+phi xz^2+phi^2y^2z"},
                         {{FT::LineTangentConic}, kLineConic}));
    out.push_back(pencil("A1~^4+D4~/2", "A1~^4+D4~", 2, 2, {"(y^2+xz)(x+phi z)", "xz(x+z)"},
                         {kLineConic, {FT::ThreeConcurrentLines}}));
    out.push_back(pencil("A1~^4+D4~/3", "A1~^4+D4~", 2, 2, {"(y^2+xz)(x+phi z)", "y^2(x+z)"},
                         {kLineConic, {FT::DoubleLineLine}}));
    {
        PencilExample e = pencil("A1~^4+D4~/4", "A1~^4+D4~", 2, 2, {"(x+y)(x+z)(y+z)", "(x+y+z)(Ax(y+z)+By(x+z))"},
                                 {{FT::ThreeConcurrentLines}, kLineConic});
        e.parameters = {{'A', "1"}, {'B', "phi"}};
        out.push_back(e);
    }
    out.push_back(pencil("A1~^2+D6~/1", "A1~^2+D6~", 2, 1, {"(y^2+xz)(x+z)", "xy^2"}, {kLineConic, {FT::DoubleLineLine}}));
    out.push_back(pencil("A1~^2+D6~/2", "A1~^2+D6~", 2, 1, {"(y^2+xz)(x+z)", "x^2z"}, {kLineConic, {FT::DoubleLineLine}}));
    out.push_back(pencil("A1~^2+D6~/3", "A1~^2+D6~", 2, 1, {"x^3+y^2z", "xz(x+z)"},
                         {{FT::IrreducibleCuspidal}, {FT::ThreeConcurrentLines}}));
    out.push_back(pencil("A1~^2+D6~/4", "A1~^2+D6~", 2, 1, {"(y^2+xz)x", "z(y^2+x^2+xz)"},
                         {{FT::LineTangentConic}, kLineConic}));
    out.push_back(pencil("D4~^2/1", "D4~^2", 2, 2, {"x(x+z)z", "y^2(x+phi z)"},
                         {{FT::ThreeConcurrentLines}, {FT::DoubleLineLine}}));
    out.push_back(pencil("D4~^2/2", "D4~^2", 2, 2, {"x(y^2+xz)", "z(phi y^2+xz)"},
                         {{FT::LineTangentConic}, {FT::LineTangentConic}}));
    {
        PencilExample e = pencil("A1~+E7~/1", "A1~+E7~", 2, 1, {"x^3+y^2z", "xz^2"},
                                 {{FT::IrreducibleCuspidal}, {FT::DoubleLineLine}});
        e.printed_text = "x^2+y^2z";
        e.note = "printed x^2+y^2z is not a cubic; registered as the cuspidal cubic x^3+y^2z";
        out.push_back(e);
    }
    out.push_back(pencil("A1~+E7~/2", "A1~+E7~", 2, 1, {"(y^2+xz)z", "x^3"}, {kLineConic, {FT::TripleLine}}));
    {
        PencilExample e = pencil("D8~/1", "D8~", 2, 1, {"(y^2+x^2+xz+z^2)(x+z)", "x^3+y^2z"},
                                 {kLineConic, {FT::IrreducibleCuspidal}});
        e.note = "described as a conic in the text; it is a pencil";
        out.push_back(e);
    }
    out.push_back(pencil("D8~/2", "D8~", 2, 1, {"x^3+y^2z", "(x+z)^2z"},
                         {{FT::IrreducibleCuspidal}, {FT::DoubleLineLine}}));
    out.push_back(pencil("E8~/1", "E8~", 2, 1, {"x^3+y^2z", "y^3"}, {{FT::IrreducibleCuspidal}, {FT::TripleLine}}));
    out.push_back(pencil("A2~^4/1", "A2~^4", 3, 1, {"x(x+z)(x-z)", "y(y+z)(y-z)"},
                         {{FT::ThreeConcurrentLines}, {FT::ThreeConcurrentLines}}));
    out.push_back(pencil("A2~^4/2", "A2~^4", 3, 1, {"2x^2z+yz^2", "xy^2+2yz^2"}, {kLineConic, kLineConic}));
    out.push_back(pencil("A2~^4/3", "A2~^4", 3, 1, {"x^3-y^2z", "yz(y-z)"}, {{FT::IrreducibleCuspidal}, kAnyLines}));
    out.push_back(pencil("A2~+E6~/1", "A2~+E6~", 3, 1, {"xyz", "(x+y+z)^3"}, {kAnyLines, {FT::TripleLine}}));
    out.push_back(pencil("A2~+E6~/3", "A2~+E6~", 3, 1, {"x^2(x-y)", "(2xy+2xz+y^2)z"},
                         {{FT::DoubleLineLine}, kLineConic}));
    out.push_back(pencil("E8~char3/1", "E8~char3", 3, 1, {"x^3+y^2z", "y^3"},
                         {{FT::IrreducibleCuspidal}, {FT::TripleLine}}));
    return out;
}

NetExample net(const std::string& name, const std::string& config, int degree, std::vector<std::string> gens,
               std::vector<BasePointSpec> pts)
{
    NetExample n;
    n.name = name;
    n.config = config;
    n.characteristic = 2;
    n.field_degree = degree;
    n.generators = std::move(gens);
    n.base_points = std::move(pts);
    return n;
}

std::vector<NetExample> build_nets()
{
    std::vector<NetExample> out;
    out.push_back(net("sec3-1a", "A1~^8", 1, {"x^2(y+z)", "y^2(x+z)", "z^2(x+y)"},
                      {{"(1,0,0)", 2}, {"(0,1,0)", 2}, {"(0,0,1)", 2}, {"(1,1,1)", 1}}));
    out.push_back(net("sec3-1b", "A1~^8", 1, {"xy(x+y)", "xz(x+z)", "yz(y+z)"},
                      {{"(1,0,0)", 1},
                       {"(0,1,0)", 1},
                       {"(0,0,1)", 1},
                       {"(1,1,0)", 1},
                       {"(1,0,1)", 1},
                       {"(0,1,1)", 1},
                       {"(1,1,1)", 1}}));
    out.push_back(net("sec3-2a", "A1~^4+D4~", 2, {"x^2z+xy^2", "x^2z+phi xz^2+phi^2y^2z", "x^2z+xz^2+phi y^2z"},
                      {{"(0,0,1)", 4}, {"(1,0,0)", 2}, {"(0,1,0)", 1}}));
    out.push_back(net("sec3-2b", "A1~^4+D4~", 2, {"(y^2+xz)(x+phi z)", "xz(x+z)", "xz(x+phi^2z)"},
                      {{"(1,0,0)", 2}, {"(0,0,1)", 2}, {"(0,1,0)", 3}}));
    out.push_back(net("sec3-2c", "A1~^4+D4~", 2, {"(y^2+xz)(x+phi z)", "y^2(x+z)", "y^2(x+phi^2z)"},
                      {{"(0,0,1)", 2}, {"(phi,0,1)", 2}, {"(1,0,0)", 2}, {"(0,1,0)", 1}}));
    {
        NetExample n = net("sec3-3a", "A1~^2+D6~", 1, {"(y^2+xz)(x+z)", "x^2z", "x^2(x+z)"},
                           {{"(0,0,1)", 4}, {"(0,1,0)", 2}});
        n.note = "only six of the seven points are listed";
        out.push_back(n);
    }
    {
        NetExample n = net("sec3-3b", "A1~^2+D6~", 2, {"x^3+y^2z", "xz(x+z)", "xz(x+phi z)"},
                           {{"(0,0,1)", 2}, {"(0,1,0)", 5}});
        n.note = "titled the third A1~^2+D6~ blow-down but listed second";
        out.push_back(n);
    }
    out.push_back(net("sec3-3c", "A1~^2+D6~", 2, {"x(y^2+xz)", "z(y^2+x^2+xz)", "(x+z)(y^2+phi x^2+xz)"},
                      {{"(0,0,1)", 6}, {"(0,1,0)", 1}}));
    return out;
}

} // namespace

const std::vector<ConfigEntry>& config_registry()
{
    static const std::vector<ConfigEntry> r = build_configs();
    return r;
}

const ConfigEntry& find_config(const std::string& name)
{
    for (const ConfigEntry& e : config_registry())
        if (e.config.name == name)
            return e;
    throw ConfigError("unknown configuration '" + name + "'");
}

const std::vector<PencilExample>& pencil_registry()
{
    static const std::vector<PencilExample> r = build_pencils();
    return r;
}

const std::vector<NetExample>& net_registry()
{
    static const std::vector<NetExample> r = build_nets();
    return r;
}

const NetExample& find_net(const std::string& name)
{
    std::string key = name == "fano" ? "sec3-1b" : name;
    for (const NetExample& n : net_registry())
        if (n.name == key)
            return n;
    throw ConfigError("unknown point set '" + name + "'");
}

const Char3MatrixData& char3_matrix_data()
{
    static const Char3MatrixData d = {
        {"2x^2z+yz^2", "xy^2+2yz^2"},
        "(xz+2y^2)(x+2y)",
        {{"-A^2B+B^3", "-A^2+B", "AB^2-B"}, {"-B^2-A-B", "A", "B^2"}, {"AB-A", "1", "-AB-1"}},
        "A^4B^2-A^3B^3-A^2B^4+A^4B+A^2B^3-AB^4-B^5+A^3B-AB^3+A^3",
    };
    return d;
}

const PencilExample& a2e6_subset_pencil()
{
    for (const PencilExample& p : pencil_registry())
        if (p.name == "A2~+E6~/3")
            return p;
    throw ConfigError("missing A2~+E6~ pencil");
}

const Field& example_field(int characteristic, int degree)
{
    return Field::get(characteristic, degree);
}

std::vector<MultiPoly> example_generators(const PencilExample& p)
{
    const Field& f = example_field(p.characteristic, p.field_degree);
    std::array<std::optional<FieldElement>, kNumVars> vals;
    for (const auto& [name, text] : p.parameters) {
        MultiPoly v = MultiPoly::parse(text, f);
        FieldElement c = v.is_zero() ? f.zero() : v.term_coeff(0);
        Var var = name == 'A' ? VA : name == 'B' ? VB : VT;
        vals[var] = c;
    }
    std::vector<MultiPoly> out;
    for (const std::string& g : p.generators) {
        MultiPoly m = MultiPoly::parse(g, f);
        if (!p.parameters.empty())
            m = m.evaluate_partial(vals);
        out.push_back(m);
    }
    return out;
}

std::vector<MultiPoly> example_generators(const NetExample& n)
{
    const Field& f = example_field(n.characteristic, n.field_degree);
    std::vector<MultiPoly> out;
    for (const std::string& g : n.generators)
        out.push_back(MultiPoly::parse(g, f));
    return out;
}

std::vector<BasePointSpec> summarize_locus(const std::vector<BasePointTree>& z)
{
    std::vector<BasePointSpec> out;
    for (const BasePointTree& t : z)
        out.push_back({t.root_point().to_string(), t.point_count()});
    return out;
}

} // namespace qe
