# API Routes Package
