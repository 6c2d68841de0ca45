// Writes the bundled structure-constant tables as JSON files. The tables are
// generated from matrix commutators rather than typed in, so the shipped data
// carries the same guarantees as the builders.
//
// Usage: gen_tables <output-directory>

#include "lieva/algebra_io.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: gen_tables <output-directory>\n";
        return 2;
    }
    try {
        const std::filesystem::path dir = argv[1];
        std::filesystem::create_directories(dir);
        const lieva::RationalField q;
        for (const auto& name : lieva::bundled_table_names()) {
            const auto table = lieva::bundled_table(q, name);
            std::ofstream out(dir / (name + ".json"));
            if (!out) {
                std::cerr << "gen_tables: cannot write " << (dir / (name + ".json")) << "\n";
                return 1;
            }
            out << lieva::table_to_json(table).dump(2) << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "gen_tables: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
