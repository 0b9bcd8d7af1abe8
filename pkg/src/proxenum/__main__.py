from proxenum.cli import main

main()
