# dimspread: spreading measures of D-dimensional quantum systems
# Main package initialization
