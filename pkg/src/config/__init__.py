# Configuration Package
