# CSA Routing Simulator - Main Package
