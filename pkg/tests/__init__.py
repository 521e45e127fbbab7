# Common test code
