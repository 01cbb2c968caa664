/*
Copyright 2026 the xbwt authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include <array>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "xbwt/container.hpp"
#include "xbwt/selftest.hpp"
#include "xbwt/stats.hpp"
#include "xbwt/words.hpp"

namespace {

xbwt::TransformId parse_transform(const std::string& name) {
    if (name == "bwt") return xbwt::TransformId::bwt;
    if (name == "bwts") return xbwt::TransformId::bwts;
    if (name == "st") return xbwt::TransformId::st;
    return xbwt::TransformId::lst;
}

// The order file holds the 256-byte rank table: byte value b sorts at
// position table[b].
xbwt::AlphabetOrder load_order(const std::string& path) {
    if (path.empty()) return xbwt::AlphabetOrder::identity();
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open alphabet order file: " + path);
    std::array<xbwt::Byte, 256> table;
    in.read(reinterpret_cast<char*>(table.data()), 256);
    if (in.gcount() != 256 || in.peek() != EOF)
        throw std::runtime_error("alphabet order file must hold exactly 256 bytes");
    return xbwt::AlphabetOrder::from_rank_table(table);
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"block-sorting transform container tool"};
    app.require_subcommand(1);

    std::string transform_name;
    std::size_t order_k = 0;
    std::size_t block_size = xbwt::kDefaultBlockSize;
    std::string order_file;
    std::string in_path;
    std::string out_path;

    const auto add_transform_opts = [&](CLI::App* cmd) {
        cmd->add_option("--transform", transform_name, "one of bwt, bwts, st, lst")
            ->required()
            ->check(CLI::IsMember({"bwt", "bwts", "st", "lst"}));
        cmd->add_option("--order", order_k, "context order k (st and lst only)");
        cmd->add_option("--block-size", block_size, "block size in bytes");
    };

    CLI::App* encode = app.add_subcommand("encode", "transform a file into a framed container");
    add_transform_opts(encode);
    encode->add_option("--alphabet-order", order_file,
                       "raw 256-byte rank table replacing the natural byte order");
    encode->add_option("IN", in_path, "input file")->required();
    encode->add_option("OUT", out_path, "output container")->required();

    CLI::App* decode = app.add_subcommand("decode", "restore the original file from a container");
    decode->add_option("IN", in_path, "input container")->required();
    decode->add_option("OUT", out_path, "output file")->required();

    CLI::App* stats_cmd = app.add_subcommand("stats", "report compression-proxy statistics");
    add_transform_opts(stats_cmd);
    stats_cmd->add_option("IN", in_path, "input file")->required();

    CLI::App* selftest_cmd =
        app.add_subcommand("selftest", "replay the published worked examples");

    CLI11_PARSE(app, argc, argv);

    try {
        if (encode->parsed()) {
            std::ifstream in = open_input(in_path);
            std::ofstream out = open_output(out_path);
            xbwt::encode_stream(in, out, parse_transform(transform_name), order_k,
                                block_size, load_order(order_file));
        } else if (decode->parsed()) {
            std::ifstream in = open_input(in_path);
            std::ofstream out = open_output(out_path);
            xbwt::decode_stream(in, out);
        } else if (stats_cmd->parsed()) {
            std::ifstream in = open_input(in_path);
            std::cout << xbwt::format_stats(
                xbwt::stats(in, parse_transform(transform_name), order_k, block_size));
        } else if (selftest_cmd->parsed()) {
            const xbwt::SelftestResult result = xbwt::selftest();
            std::cout << result.report;
            if (!result.passed) {
                std::fprintf(stderr, "xbwt: selftest failed\n");
                return 1;
            }
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "xbwt: %s\n", e.what());
        return 1;
    }
    return 0;
}
