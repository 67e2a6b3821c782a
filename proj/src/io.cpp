#include "abelian/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace abelian {

void write_code(std::ostream& os, const AbelianCode& c) {
    os << "p=" << c.field()->p << " m=" << c.field()->m << "\n";
    os << "r=[" << c.r1() << "," << c.r2() << "]\n";
    os << "multiplier=[" << c.multiplier().first << ","
       << c.multiplier().second << "]\n";
    os << "defining_set_reps=[";
    const auto& reps = c.defining_set().reps();
    for (std::size_t i = 0; i < reps.size(); ++i)
        os << (i ? "," : "") << "[" << reps[i].a << "," << reps[i].b << "]";
    os << "]\n";
}

CodePtr read_code(std::istream& is) {
    std::string line;
    std::uint32_t p = 0, m = 0, r1 = 0, r2 = 0, u = 0, v = 0;
    if (!std::getline(is, line) ||
        std::sscanf(line.c_str(), "p=%u m=%u", &p, &m) != 2)
        throw ParseError("expected 'p=<int> m=<int>'");
    if (!std::getline(is, line) ||
        std::sscanf(line.c_str(), "r=[%u,%u]", &r1, &r2) != 2)
        throw ParseError("expected 'r=[r1,r2]'");
    if (!std::getline(is, line) ||
        std::sscanf(line.c_str(), "multiplier=[%u,%u]", &u, &v) != 2)
        throw ParseError("expected 'multiplier=[u,v]'");
    if (!std::getline(is, line) || line.rfind("defining_set_reps=[", 0) != 0)
        throw ParseError("expected 'defining_set_reps=[...]'");

    Field f = make_field(p, m);
    std::vector<IndexPair> reps;
    const char* s = line.c_str() + 19;
    while (true) {
        while (*s == ',' || *s == ' ') ++s;
        if (*s == ']' || *s == '\0') break;
        std::uint32_t a = 0, b = 0;
        int consumed = 0;
        if (std::sscanf(s, "[%u,%u]%n", &a, &b, &consumed) != 2)
            throw ParseError("bad rep in defining_set_reps");
        if (a >= r1 || b >= r2)
            throw ParseError("rep out of range");
        reps.push_back({a, b});
        s += consumed;
    }
    OrbitSet d = OrbitSet::closure_of(r1, r2, f->size, reps);
    if (d.reps() != reps)
        throw ParseError("reps are not sorted orbit-minimal representatives");
    return code_from_defining_set(f, d, {u, v});
}

void write_code_file(const std::string& path, const AbelianCode& c) {
    if (path == "-") {
        write_code(std::cout, c);
        return;
    }
    std::ofstream os(path);
    if (!os) throw ParseError("cannot open " + path + " for writing");
    write_code(os, c);
}

CodePtr read_code_file(const std::string& path) {
    if (path == "-") return read_code(std::cin);
    std::ifstream is(path);
    if (!is) throw ParseError("cannot open " + path);
    return read_code(is);
}

}  // namespace abelian
