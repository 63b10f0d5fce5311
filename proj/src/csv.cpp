#include "xgate/csv.hpp"

#include <charconv>
#include <stdexcept>
#include <system_error>

namespace xgate {

std::string format_double(double value) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 12);
  if (res.ec != std::errc()) throw std::runtime_error("format_double: conversion failed");
  return std::string(buf, res.ptr);
}

CsvBuilder::CsvBuilder(std::vector<std::string> header) : columns_(header.size()) {
  if (columns_ == 0) throw std::invalid_argument("CsvBuilder: header must not be empty");
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i > 0) body_ += ',';
    body_ += header[i];
  }
  body_ += '\n';
}

void CsvBuilder::add_row(const std::vector<std::string>& cells) {
  if (cells.size() != columns_) {
    throw std::invalid_argument("CsvBuilder: row width does not match header");
  }
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) body_ += ',';
    body_ += cells[i];
  }
  body_ += '\n';
}

void CsvBuilder::add_numeric_row(const std::vector<double>& values) {
  std::vector<std::string> cells;
  cells.reserve(values.size());
  for (double v : values) cells.push_back(format_double(v));
  add_row(cells);
}

}  // namespace xgate
