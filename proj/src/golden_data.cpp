#include "gnnbench/golden.hpp"

#include <array>
#include <string_view>

namespace gnnbench::golden {

namespace {
Graph from_rows(std::span<const std::string_view> rows) {
    Graph g(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i + 1; j < rows.size(); ++j)
            if (rows[i][j] == '1') g.add_edge(i, j);
    return g;
}

}  // namespace

Graph decalin() {
    static constexpr std::array<std::string_view, 10> rows{
        "0110001000",
        "1000010001",
        "1001000000",
        "0010100000",
        "0001010000",
        "0100100000",
        "1000000100",
        "0000001010",
        "0000000101",
        "0100000010"};
    return from_rows(rows);
}

Graph bicyclopentyl() {
    static constexpr std::array<std::string_view, 10> rows{
        "0110010000",
        "1000001001",
        "1001000000",
        "0010100000",
        "0001010000",
        "1000100000",
        "0100000100",
        "0000001010",
        "0000000101",
        "0100000010"};
    return from_rows(rows);
}

Graph cospectral_g() {
    static constexpr std::array<std::string_view, 10> rows{
        "0101010100",
        "1011100000",
        "0100101001",
        "1100010100",
        "0110001001",
        "1001000011",
        "0010100110",
        "1001001010",
        "0000011101",
        "0010110010"};
    return from_rows(rows);
}

Graph cospectral_h() {
    static constexpr std::array<std::string_view, 10> rows{
        "0101001100",
        "1011100000",
        "0100110001",
        "1100010100",
        "0110001001",
        "0011000110",
        "1000100011",
        "1001010010",
        "0000011101",
        "0010101010"};
    return from_rows(rows);
}

Graph rook() {
    static constexpr std::array<std::string_view, 16> rows{
        "0111100010001000",
        "1011010001000100",
        "1101001000100010",
        "1110000100010001",
        "1000011110001000",
        "0100101101000100",
        "0010110100100010",
        "0001111000010001",
        "1000100001111000",
        "0100010010110100",
        "0010001011010010",
        "0001000111100001",
        "1000100010000111",
        "0100010001001011",
        "0010001000101101",
        "0001000100011110"};
    return from_rows(rows);
}

Graph shrikhande() {
    static constexpr std::array<std::string_view, 16> rows{
        "0101110000001001",
        "1010011000001100",
        "0101001100000110",
        "1010100100000011",
        "1001010111000000",
        "1100101001100000",
        "0110010100110000",
        "0011101010010000",
        "0000100101011100",
        "0000110010100110",
        "0000011001010011",
        "0000001110101001",
        "1100000010010101",
        "0110000011001010",
        "0011000001100101",
        "1001000000111010"};
    return from_rows(rows);
}

Matrix decalin_laplacian_printed() {
    return Matrix(10, 10, {
        1.0, -0.33, -0.41, 0.0, 0.0, 0.0, -0.41, 0.0, 0.0, 0.0,
        -0.33, 1.0, 0.0, 0.0, 0.0, -0.41, 0.0, 0.0, 0.0, -0.41,
        -0.41, 0.0, 1.0, -0.5, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0,
        0.0, 0.0, -0.5, 1.0, -0.5, 0.0, 0.0, 0.0, 0.0, 0.0,
        0.0, 0.0, 0.0, -0.5, 1.0, -0.5, 0.0, 0.0, 0.0, 0.0,
        0.0, -0.41, 0.0, 0.0, -0.5, 1.0, 0.0, 0.0, 0.0, 0.0,
        -0.41, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0, -0.5, 0.0, 0.0,
        0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -0.5, 1.0, -0.5, 0.0,
        0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -0.5, 1.0, -0.5,
        0.0, -0.41, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -0.5, 1.0});
}

Matrix bicyclopentyl_laplacian_printed() {
    return Matrix(10, 10, {
        1.0, -0.33, -0.41, 0.0, 0.0, -0.41, 0.0, 0.0, 0.0, 0.0,
        -0.33, 1.0, 0.0, 0.0, 0.0, 0.0, -0.41, 0.0, 0.0, -0.41,
        -0.41, 0.0, 1.0, -0.5, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0,
        0.0, 0.0, -0.5, 1.0, -0.5, 0.0, 0.0, 0.0, 0.0, 0.0,
        0.0, 0.0, 0.0, -0.5, 1.0, -0.5, 0.0, 0.0, 0.0, 0.0,
        -0.41, 0.0, 0.0, 0.0, -0.5, 1.0, 0.0, 0.0, 0.0, 0.0,
        0.0, -0.41, 0.0, 0.0, 0.0, 0.0, 1.0, -0.5, 0.0, 0.0,
        0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -0.5, 1.0, -0.5, 0.0,
        0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -0.5, 1.0, -0.5,
        0.0, -0.41, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -0.5, 1.0});
}

}  // namespace gnnbench::golden
