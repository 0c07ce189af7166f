pytest_plugins = ("coincidence", )
