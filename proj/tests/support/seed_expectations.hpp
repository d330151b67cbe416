#pragma once

// The wind-energy ontology written out by hand, independent of the
// library's own seed table.

#include <array>
#include <string>
#include <tuple>
#include <vector>

namespace expected {

inline const std::vector<std::string> kClasses = {
    "Wind Power Plant", "Meteorological Tower", "Wind Turbine", "Monitoring and Control System",
    "Forecast System", "Data Logger", "Sensor", "Humidity Sensor", "Pressure Sensor", "Temperature Sensor",
    "Solar Radiation Sensor", "Wind Profiler", "Wind Vane", "Anemometer", "Cup Anemometer",
    "Propeller Anemometer", "Sonic Anemometer", "Meteorological Data", "Wind", "Wind Speed", "Wind Direction",
    "Vertical Wind Component", "Horizontal Wind Component", "U-component", "V-component", "Wind Shear",
    "Turbulence", "H-axis Turbine", "V-axis Turbine", "Rotor", "Nacelle", "Tower", "Blade", "Hub", "Gearbox",
    "Generator", "Wind Power", "Control System", "DAQ System", "Analysis System", "Turbine Status",
    "Measured Power", "Power Quality", "Numerical Weather Prediction", "Physical Model", "Statistical Model",
    "Forecast Power"};

// (class, synonym)
inline const std::vector<std::pair<std::string, std::string>> kSynonyms = {
    {"Wind Power Plant", "WPP"},
    {"Wind Power Plant", "Wind Plant"},
    {"Wind Power Plant", "Wind Energy Plant"},
    {"Wind Power Plant", "Wind Farm"},
    {"Wind Power", "Wind Power Generation"},
    {"Wind Power", "Energy"},
    {"Wind Power", "Generation"},
    {"Wind Power", "Wind Energy"},
    {"Wind Power", "Wind Generation"},
    {"Wind Power", "Wind Generated Power"},
    {"Wind Power", "Electricity Production"},
    {"Wind Turbine", "Turbine"},
    {"Wind Turbine", "Wind Turbine Generator"},
    {"Wind Turbine", "WTG"},
    {"Wind Turbine", "Generator"},
    {"Wind Vane", "Weather Vane"},
    {"Wind Vane", "Weather Cock"},
};

// (class, property)
inline const std::vector<std::pair<std::string, std::string>> kProperties = {
    {"Wind Power Plant", "name"},
    {"Wind Power Plant", "owner"},
    {"Wind Power Plant", "location"},
    {"Wind Power Plant", "license date"},
    {"Wind Power Plant", "number of turbines"},
    {"Wind Power Plant", "installed capacity"},
    {"Wind Power Plant", "capacity factor"},
    {"Wind Power Plant", "voltage level"},
    {"Wind Turbine", "model"},
    {"Wind Turbine", "hub height"},
    {"Wind Turbine", "swept area"},
    {"Wind Turbine", "rated power"},
    {"Wind Turbine", "power curve"},
    {"Wind Turbine", "cut-in wind speed"},
    {"Wind Turbine", "cut-out wind speed"},
    {"Wind Turbine", "rotor diameter"},
    {"Wind Turbine", "number of blades"},
    {"Wind Speed", "speed"},
    {"Wind Speed", "height"},
    {"Wind Speed", "date"},
    {"Wind Speed", "wind power plant"},
};

// (class, property, synonym)
inline const std::vector<std::tuple<std::string, std::string, std::string>> kPropertySynonyms = {
    {"Wind Power Plant", "installed capacity", "rated capacity"},
    {"Wind Power Plant", "installed capacity", "nominal capacity"},
    {"Wind Power Plant", "installed capacity", "maximum effect"},
    {"Wind Power Plant", "installed capacity", "power capacity"},
    {"Wind Power Plant", "installed capacity", "nameplate capacity"},
    {"Wind Power Plant", "installed capacity", "wind power capacity"},
    {"Wind Power Plant", "capacity factor", "utilisation rate"},
};

// (kind, source, target) for the subclass and part-of taxonomy.
inline const std::vector<std::tuple<std::string, std::string, std::string>> kTaxonomy = {
    {"has", "Wind Power Plant", "Meteorological Tower"},
    {"has", "Wind Power Plant", "Wind Turbine"},
    {"has", "Wind Power Plant", "Monitoring and Control System"},
    {"has", "Wind Power Plant", "Forecast System"},
    {"has", "Meteorological Tower", "Data Logger"},
    {"has", "Meteorological Tower", "Sensor"},
    {"is_a", "Humidity Sensor", "Sensor"},
    {"is_a", "Pressure Sensor", "Sensor"},
    {"is_a", "Temperature Sensor", "Sensor"},
    {"is_a", "Solar Radiation Sensor", "Sensor"},
    {"is_a", "Wind Profiler", "Sensor"},
    {"is_a", "Wind Vane", "Sensor"},
    {"is_a", "Anemometer", "Sensor"},
    {"is_a", "Cup Anemometer", "Anemometer"},
    {"is_a", "Propeller Anemometer", "Anemometer"},
    {"is_a", "Sonic Anemometer", "Anemometer"},
    {"has", "Wind", "Wind Speed"},
    {"has", "Wind", "Wind Direction"},
    {"has", "Wind", "Vertical Wind Component"},
    {"has", "Wind", "Horizontal Wind Component"},
    {"has", "Wind", "Wind Shear"},
    {"has", "Wind", "Turbulence"},
    {"has", "Horizontal Wind Component", "U-component"},
    {"has", "Horizontal Wind Component", "V-component"},
    {"is_a", "H-axis Turbine", "Wind Turbine"},
    {"is_a", "V-axis Turbine", "Wind Turbine"},
    {"has", "Wind Turbine", "Rotor"},
    {"has", "Wind Turbine", "Nacelle"},
    {"has", "Wind Turbine", "Tower"},
    {"has", "Rotor", "Blade"},
    {"has", "Rotor", "Hub"},
    {"has", "Nacelle", "Gearbox"},
    {"has", "Nacelle", "Generator"},
    {"has", "Monitoring and Control System", "Control System"},
    {"has", "Monitoring and Control System", "DAQ System"},
    {"has", "Monitoring and Control System", "Analysis System"},
};

inline const std::vector<std::tuple<std::string, std::string, std::string>> kFunctionalRelations = {
    {"generates", "Wind Turbine", "Wind Power"},
    {"causes", "Wind", "Wind Power"},
    {"utilizes", "Wind Turbine", "Wind"},
    {"measures", "Anemometer", "Wind Speed"},
    {"controls", "Control System", "Wind Power Plant"},
};

}  // namespace expected
