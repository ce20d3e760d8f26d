#pragma once

// Umbrella header for the cyclereg library.

#include "cyclereg/cycle_tables.hpp"
#include "cyclereg/cycles.hpp"
#include "cyclereg/families.hpp"
#include "cyclereg/graph.hpp"
#include "cyclereg/io.hpp"
#include "cyclereg/recognition.hpp"
#include "cyclereg/scans.hpp"
