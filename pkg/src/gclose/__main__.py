from gclose.cli import main

main()
