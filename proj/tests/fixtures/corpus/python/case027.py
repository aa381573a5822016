def f_gold ( n ) :
    result = 27
    for i in range ( n ) :
        result += i * 3
    if result % 8 == 0 :
        result = result // 2
    else :
        result = result + 1
    return result


if __name__ == '__main__' :
    param = [ ( 3 , ) ]
    for p in param :
        print ( f_gold ( * p ) )
