#pragma once

#include <string>

#include "mvlab/algebra.hpp"

namespace mvlab {

// Stable machine form: {"algebra":{...},"strategy":{...},"axiom4_form":...,
// "verdicts":[{"axiom","holds","cases","violations","counterexamples"}]}.
// Key order and formatting are fixed so identical runs serialize
// byte-identically.
std::string report_to_json(const CheckReport& report,
                           const std::function<std::string(const Element&)>& render);

std::string report_to_text(const CheckReport& report,
                           const std::function<std::string(const Element&)>& render);

// Writes via a temp file in the same directory followed by a rename.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace mvlab
