from qact.cli import main

main()
