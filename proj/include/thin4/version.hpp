#pragma once

#define THIN4_VERSION "0.1.0"
